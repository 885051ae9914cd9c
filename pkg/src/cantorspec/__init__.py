"""cantorspec: exact spectrality toolkit for self-similar Cantor measures.

The library decides, with integer arithmetic on the verdict path, whether
a digit/candidate pair is compatible, whether the candidate's digit
expansions form a spectrum for the self-similar measure of the system
(N, D), and how to construct such candidates from the tiling structure of
the digit set; a numeric kernel corroborates every exact verdict through
the measure's Fourier transform.
"""

from .compat import (
    CompatibilityCertificate,
    is_compatible,
    pair_power,
    reduce_s,
    search_candidate_s,
)
from .cyclotomic import (
    CYCLOTOMIC_CACHE_LIMIT,
    IntPolynomial,
    cyclotomic,
    digit_polynomial,
    mask_zero_residues,
    symbol_vanishes_at,
    vanishes_at_primitive_root,
)
from .decide import (
    STATUS_SPECTRAL,
    STATUS_UNIT_INTERVAL,
    STATUS_UNKNOWN,
    CanonicalForm,
    SpectralityReport,
    SpectrumVerdict,
    canonicalize_digits,
    decide_spectrum,
    report_measure_spectrality,
    successor,
    verify_witness,
)
from .kernel import (
    LAMBDA_BUDGET,
    TruncatedProduct,
    attractor_bounds,
    lambda_enumerate,
    mu_hat,
    q_eval,
    q_eval_with_bound,
    symbol_eval,
    transfer_residual,
)
from .systems import (
    DEFAULT_POLICY,
    BudgetExceededError,
    ConsistencyError,
    PreconditionError,
    RationalInterval,
    ScaleDigitSystem,
    SpectrumCandidate,
    TruncationPolicy,
)
from .tiling import (
    TilingConstruction,
    construct_spectrum_set,
    find_modulus_l,
    is_complementing,
    prime_power_sets,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CYCLOTOMIC_CACHE_LIMIT",
    "CanonicalForm",
    "CompatibilityCertificate",
    "ConsistencyError",
    "DEFAULT_POLICY",
    "IntPolynomial",
    "LAMBDA_BUDGET",
    "PreconditionError",
    "RationalInterval",
    "STATUS_SPECTRAL",
    "STATUS_UNIT_INTERVAL",
    "STATUS_UNKNOWN",
    "ScaleDigitSystem",
    "SpectralityReport",
    "SpectrumCandidate",
    "SpectrumVerdict",
    "TilingConstruction",
    "TruncatedProduct",
    "TruncationPolicy",
    "attractor_bounds",
    "canonicalize_digits",
    "construct_spectrum_set",
    "cyclotomic",
    "decide_spectrum",
    "digit_polynomial",
    "find_modulus_l",
    "is_compatible",
    "is_complementing",
    "lambda_enumerate",
    "mask_zero_residues",
    "mu_hat",
    "pair_power",
    "prime_power_sets",
    "q_eval",
    "q_eval_with_bound",
    "reduce_s",
    "report_measure_spectrality",
    "search_candidate_s",
    "successor",
    "symbol_eval",
    "symbol_vanishes_at",
    "transfer_residual",
    "vanishes_at_primitive_root",
    "verify_witness",
]
