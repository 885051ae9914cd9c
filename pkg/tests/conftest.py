import os
import sys

from hypothesis import settings

# Allow running the suite straight from a checkout, without installing.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

settings.register_profile("default", deadline=None)
settings.load_profile("default")
