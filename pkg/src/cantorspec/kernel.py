"""Numeric diagnostics for a scale/digit system.

This module houses the analytic objects: the digit symbol, the Fourier
transform of the self-similar measure as a truncated infinite product with
a guaranteed tail bound, the finite-depth slices of the candidate spectrum,
the exact rational enclosure of the attractor, and the completeness sum Q.
Nothing here carries a verdict; the exact decisions live in `compat`,
`decide` and `tiling`, and these functions corroborate them numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .systems import (
    DEFAULT_POLICY,
    BudgetExceededError,
    PreconditionError,
    RationalInterval,
    ScaleDigitSystem,
    SpectrumCandidate,
    TruncationPolicy,
)

#: Hard ceiling on the number of points a spectrum slice may enumerate.
LAMBDA_BUDGET = 1_000_000

_TWO_PI = 2.0 * math.pi


def symbol_eval(digits, xi) -> complex:
    """The symbol m_D(xi) = (1/|D|) * sum_d e^(-2*pi*i*d*xi).

    Total on its domain; |result| <= 1 always, and the value is 1 at xi = 0
    (and at every integer xi when the digits are integers).
    """
    digs = tuple(digits)
    acc = 0j
    for d in digs:
        acc += cmath.exp(-2j * math.pi * d * xi)
    return acc / len(digs)


@dataclass(frozen=True)
class TruncatedProduct:
    """A finite product approximation together with its guaranteed error."""

    value: complex
    error_bound: float
    factors: int


def mu_hat(system: ScaleDigitSystem, xi, policy: TruncationPolicy = DEFAULT_POLICY) -> TruncatedProduct:
    """Fourier transform of the self-similar measure at xi.

    Evaluates prod_{j=1..J} m_D(N^-j * xi) with J chosen so the neglected
    tail moves the value by at most policy.product_epsilon.  The tail
    control uses |m_D(eta) - 1| <= 2*pi*(sum|d|/|D|)*|eta| and the geometric
    decay of N^-j; the sum t of those bounds past J gives
    |true - finite product| <= e^t - 1, which the chosen J pushes below
    epsilon.  J is floored at what an argument of magnitude 1 would need,
    so sub-unit arguments come back tighter than epsilon by their own
    magnitude; that floor is what makes the recursion defect measured by
    `transfer_residual` actually track epsilon instead of cancelling.  If
    the running product drops below epsilon/4 in magnitude the loop stops
    early: the remaining factors have modulus at most 1, so the absolute
    error is below epsilon either way.
    """
    x = float(xi)
    if x == 0.0:
        return TruncatedProduct(complex(1.0), 0.0, 0)
    digits = system.digits
    lipschitz = _TWO_PI * sum(abs(d) for d in digits) / len(digits)
    if lipschitz == 0.0:  # D = {0}: the point mass, transform identically 1
        return TruncatedProduct(complex(1.0), 0.0, 0)
    base = system.modulus
    target = math.log1p(policy.product_epsilon)
    ratio = lipschitz * max(abs(x), 1.0) / ((base - 1) * target)
    j_stop = 1
    if ratio > base:
        j_stop = max(1, math.ceil(math.log(ratio) / math.log(base)))
    while lipschitz * max(abs(x), 1.0) / (base**j_stop * (base - 1)) > target:
        j_stop += 1
    tail = lipschitz * abs(x) / (base**j_stop * (base - 1))
    tail_bound = math.expm1(tail)
    cutoff = policy.product_epsilon / 4.0
    value = complex(1.0)
    scaled = x
    for j in range(1, j_stop + 1):
        scaled /= system.scale
        value *= symbol_eval(digits, scaled)
        if abs(value) < cutoff:
            return TruncatedProduct(value, abs(value) * (2.0 + tail_bound), j)
    return TruncatedProduct(value, tail_bound, j_stop)


def attractor_bounds(scale: int, elements) -> RationalInterval:
    """Exact rational enclosure of the attractor of x -> (x+s)/N over s.

    [a/(N-1), b/(N-1)] for N > 0 and [(a+N*b)/(N^2-1), (b+N*a)/(N^2-1)] for
    N < 0, where a and b are the smallest and largest elements.  The
    interval is forward-invariant under every map, which is what the cycle
    search relies on.
    """
    elems = tuple(elements)
    if not elems:
        raise PreconditionError("element set must be nonempty")
    if not isinstance(scale, int) or abs(scale) < 2:
        raise PreconditionError(f"scale must be an integer with |N| >= 2, got {scale!r}")
    a, b = min(elems), max(elems)
    if scale > 0:
        return RationalInterval(Fraction(a, scale - 1), Fraction(b, scale - 1))
    den = scale * scale - 1
    return RationalInterval(Fraction(a + scale * b, den), Fraction(b + scale * a, den))


def lambda_enumerate(
    scale: int,
    candidate: SpectrumCandidate,
    depth: int,
    budget: int = LAMBDA_BUDGET,
) -> tuple[int, ...]:
    """The depth-slice of the candidate spectrum, sorted and deduplicated.

    Returns { sum_{j=0}^{depth-1} s_j * N^j : s_j in S }.  Slices use
    exactly `depth` digit positions including trailing zeros, so with
    0 in S they are nested as depth grows and exhaust the full spectrum
    in the limit.
    """
    if not isinstance(depth, int) or depth < 1:
        raise PreconditionError(f"depth must be a positive integer, got {depth!r}")
    size = candidate.size
    if size**depth > budget:
        raise BudgetExceededError(
            f"|S|^depth = {size}^{depth} exceeds the enumeration budget {budget}"
        )
    values = {0}
    power = 1
    for _ in range(depth):
        values = {v + s * power for v in values for s in candidate.elements}
        power *= scale
    return tuple(sorted(values))


def q_eval_with_bound(
    system: ScaleDigitSystem,
    candidate: SpectrumCandidate,
    xi,
    policy: TruncationPolicy = DEFAULT_POLICY,
    budget: int = LAMBDA_BUDGET,
) -> tuple[float, float]:
    """Completeness sum over the depth-slice, with its truncation bound.

    Q_depth(xi) = sum over the slice of |mu_hat(xi + lambda)|^2.  For a
    compatible pair the exact Q never exceeds 1 and the slices increase to
    it; the returned bound accounts for the per-factor product truncation.
    """
    total = 0.0
    err = 0.0
    for lam in lambda_enumerate(system.scale, candidate, policy.depth, budget):
        prod = mu_hat(system, xi + lam, policy)
        mag = abs(prod.value)
        total += mag * mag
        err += prod.error_bound * (2.0 * mag + prod.error_bound)
    return total, err


def q_eval(
    system: ScaleDigitSystem,
    candidate: SpectrumCandidate,
    xi,
    policy: TruncationPolicy = DEFAULT_POLICY,
    budget: int = LAMBDA_BUDGET,
) -> float:
    """Completeness sum Q_depth(xi); see `q_eval_with_bound`."""
    return q_eval_with_bound(system, candidate, xi, policy, budget)[0]


def transfer_residual(
    system: ScaleDigitSystem,
    candidate: SpectrumCandidate,
    xi,
    depth: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
    budget: int = LAMBDA_BUDGET,
) -> float:
    """Defect of the averaging-operator recursion at finite depth.

    Exact transforms satisfy
        Q_{d+1}(xi) = sum_s |m_D((xi+s)/N)|^2 * Q_d((xi+s)/N)
    because each (d+1)-digit point splits uniquely as s + N*(d-digit point)
    and the symbol is 1-periodic at integer translates.  Both sides here
    are computed from truncated products, so the returned |lhs - rhs|
    isolates product-truncation error and shrinks with product_epsilon.
    """
    if candidate.size != system.size:
        raise PreconditionError(
            f"recursion requires |S| = |D|, got |S| = {candidate.size}, |D| = {system.size}"
        )
    lhs = q_eval(system, candidate, xi, replace(policy, depth=depth + 1), budget)
    inner_policy = replace(policy, depth=depth)
    rhs = 0.0
    for s in candidate.elements:
        inner = (float(xi) + s) / system.scale
        weight = abs(symbol_eval(system.digits, inner)) ** 2
        rhs += weight * q_eval(system, candidate, inner, inner_policy, budget)
    return abs(lhs - rhs)
