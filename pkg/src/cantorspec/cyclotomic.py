"""Exact integer-polynomial arithmetic and cyclotomic vanishing tests.

Every verdict-bearing question in this library eventually reduces to "does
a sum of roots of unity vanish?", and those are precisely the numerically
ill-conditioned cases, so the answer is never read off a float.  Instead
the sum is encoded as an integer polynomial and the question becomes exact
divisibility by a cyclotomic polynomial: for b >= 2 and gcd(a, b) = 1,

    sum_d e^(2*pi*i*a*d/b) = 0   <=>   Phi_b(z) divides sum_d z^d,

because the left side evaluates the digit polynomial at a primitive b-th
root of unity, whose minimal polynomial over the rationals is Phi_b.

Polynomials are dense coefficient tuples, constant term first, with no
trailing zero on nonzero polynomials; () is the zero polynomial.  This is
enough arithmetic for the library (add/sub/mul, exact division, shifts);
it is not a general polynomial-algebra package.
"""

from __future__ import annotations

from fractions import Fraction

from .systems import ConsistencyError, PreconditionError, ScaleDigitSystem

#: Cyclotomic polynomials with index up to this bound are memoized.  The
#: tiling construction asks for Phi at every prime power dividing its
#: modulus, so repeated queries are the norm.
CYCLOTOMIC_CACHE_LIMIT = 10_000

_cyclotomic_cache: dict[int, "IntPolynomial"] = {}


class IntPolynomial:
    """A polynomial with arbitrary-precision integer coefficients.

    >>> IntPolynomial((1, 0, 1)).degree
    2
    >>> IntPolynomial((-1, 1)) * IntPolynomial((1, 1))
    IntPolynomial((-1, 0, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        items = list(coeffs)
        while items and items[-1] == 0:
            items.pop()
        self.coeffs = tuple(items)

    @classmethod
    def from_exponents(cls, exponents) -> "IntPolynomial":
        """Sum of z^e over the (possibly repeating) nonnegative exponents."""
        exps = list(exponents)
        if any(e < 0 for e in exps):
            raise PreconditionError(f"exponents must be nonnegative, got {min(exps)}")
        coeffs = [0] * (max(exps) + 1) if exps else []
        for e in exps:
            coeffs[e] += 1
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by z^k (k >= 0)."""
        if k < 0:
            raise PreconditionError(f"shift must be nonnegative, got {k}")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction and complex points."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "IntPolynomial"):
        """Long division over the integers.

        Raises if a leading-coefficient division is inexact; every divisor
        used internally is monic, so this never triggers in library code.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot = [0] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            q, r = divmod(rem[-1], lead)
            if r != 0:
                raise ValueError(
                    f"leading coefficient {rem[-1]} not divisible by {lead}"
                )
            pos = len(rem) - len(other.coeffs)
            quot[pos] = q
            for i, c in enumerate(other.coeffs):
                rem[pos + i] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def divisible_by(self, other: "IntPolynomial") -> bool:
        _, rem = divmod(self, other)
        return rem.is_zero()


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Phi_n, monic with integer coefficients.

    Computed by exact division of z^n - 1 by the product of Phi_d over the
    proper divisors d of n.  The cache fill is idempotent, so concurrent
    callers at worst recompute an identical value.

    >>> cyclotomic(1)
    IntPolynomial((-1, 1))
    >>> cyclotomic(12)
    IntPolynomial((1, 0, -1, 0, 1))
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"cyclotomic index must be a positive integer, got {n!r}")
    cached = _cyclotomic_cache.get(n)
    if cached is not None:
        return cached
    poly = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            poly, rem = divmod(poly, cyclotomic(d))
            if not rem.is_zero():
                raise ConsistencyError(f"z^{n} - 1 not divisible by Phi_{d}")  # pragma: no cover
    if n <= CYCLOTOMIC_CACHE_LIMIT:
        _cyclotomic_cache[n] = poly
    return poly


def vanishes_at_primitive_root(p: IntPolynomial, m: int) -> bool:
    """Whether p vanishes at the primitive m-th roots of unity.

    Equivalent to Phi_m dividing p exactly over the integers.  The zero
    polynomial is rejected: divisibility would hold trivially but the
    question is meaningless for it.
    """
    if p.is_zero():
        raise PreconditionError("vanishing test rejects the zero polynomial")
    if not isinstance(m, int) or m < 1:
        raise PreconditionError(f"root order must be a positive integer, got {m!r}")
    return p.divisible_by(cyclotomic(m))


def digit_polynomial(digits, modulus: int | None = None) -> IntPolynomial:
    """Sum of z^d over the digits, shifted to nonnegative exponents.

    With a modulus, exponents are additionally reduced mod it; this keeps
    values at modulus-th roots of unity unchanged while bounding degree.
    """
    digs = tuple(digits)
    if not digs:
        raise PreconditionError("digit set must be nonempty")
    low = min(digs)
    exps = [d - low for d in digs]
    if modulus is not None:
        exps = [e % modulus for e in exps]
    return IntPolynomial.from_exponents(exps)


def symbol_vanishes_at(digits, point) -> bool:
    """Exact test of whether the digit symbol m_D vanishes at a rational point.

    m_D(a/b) with gcd(a, b) = 1 is a sum of b-th roots of unity; it vanishes
    iff Phi_b divides the (shifted, exponent-reduced) digit polynomial.  At
    integers the symbol equals 1, so the answer there is always False.
    """
    frac = Fraction(point)
    b = frac.denominator
    if b == 1:
        return False
    poly = digit_polynomial(digits, modulus=b)
    return poly.divisible_by(cyclotomic(b))


def mask_zero_residues(system: ScaleDigitSystem) -> frozenset[int]:
    """Residues r mod |N| at which the scaled symbol m_{D/N} vanishes.

    For integer k, m_{D/N}(k) depends only on k mod |N| (for negative N the
    value conjugates, leaving zeros unchanged).  The returned set contains
    exactly the r in {1, ..., |N|-1} with m_{D/N}(k) = 0 for every integer
    k congruent to r; the test per residue is Phi_m divisibility with
    m = |N| / gcd(r, |N|).
    """
    m = system.modulus
    return frozenset(
        r for r in range(1, m) if symbol_vanishes_at(system.digits, Fraction(r, m))
    )
