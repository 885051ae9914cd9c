"""Value types shared across the library, plus its error hierarchy.

Everything here is immutable.  Systems and candidate sets normalize their
element lists to sorted tuples at construction time and validate the
invariants every downstream operation relies on (|N| >= 2, nonempty and
pairwise-distinct entries, and so on), so later code never re-checks them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class PreconditionError(ValueError):
    """A mathematical hypothesis of the requested operation is violated."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured size budget."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the computed object contradicts itself."""


def _as_int_tuple(values, what: str) -> tuple[int, ...]:
    items = tuple(values)
    if not items:
        raise PreconditionError(f"{what} must be nonempty")
    for v in items:
        if not isinstance(v, int) or isinstance(v, bool):
            raise PreconditionError(f"{what} must consist of integers, got {v!r}")
    if len(set(items)) != len(items):
        raise PreconditionError(f"{what} must be pairwise distinct, got {sorted(items)}")
    return tuple(sorted(items))


@dataclass(frozen=True)
class ScaleDigitSystem:
    """The pair (N, D): an integer scale with |N| >= 2 and a finite digit set."""

    scale: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.scale, int) or isinstance(self.scale, bool):
            raise PreconditionError(f"scale must be an integer, got {self.scale!r}")
        if abs(self.scale) < 2:
            raise PreconditionError(f"scale must satisfy |N| >= 2, got {self.scale}")
        object.__setattr__(self, "digits", _as_int_tuple(self.digits, "digit set"))

    @property
    def modulus(self) -> int:
        """|N|; all residue arithmetic is insensitive to the sign of N."""
        return abs(self.scale)

    @property
    def size(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class SpectrumCandidate:
    """A finite integer set S, candidate for generating a spectrum."""

    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", _as_int_tuple(self.elements, "candidate set"))

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class TruncationPolicy:
    """Approximation knobs for the infinite objects: the number of digit
    positions kept when slicing the candidate spectrum, and the tail budget
    for the infinite Fourier product."""

    depth: int = 8
    product_epsilon: float = 1e-12

    def __post_init__(self):
        if not isinstance(self.depth, int) or self.depth < 1:
            raise PreconditionError(f"depth must be a positive integer, got {self.depth!r}")
        if not 0.0 < self.product_epsilon < 1.0:
            raise PreconditionError(
                f"product_epsilon must lie in (0, 1), got {self.product_epsilon!r}"
            )


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class RationalInterval:
    """A closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise PreconditionError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    def integers(self) -> range:
        """All integers inside the interval (inclusive endpoints)."""
        return range(math.ceil(self.lo), math.floor(self.hi) + 1)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def scaled(self, factor: int) -> "RationalInterval":
        """The interval dilated about 0 by a positive integer factor."""
        if factor < 1:
            raise PreconditionError(f"scale factor must be a positive integer, got {factor!r}")
        return RationalInterval(self.lo * factor, self.hi * factor)
