import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cantorspec import (
    IntPolynomial,
    PreconditionError,
    ScaleDigitSystem,
    cyclotomic,
    digit_polynomial,
    mask_zero_residues,
    symbol_vanishes_at,
    vanishes_at_primitive_root,
)


def numeric_symbol(digits, xi):
    """Independent float evaluation of the symbol (1/|D|) sum e(-d*xi)."""
    return sum(cmath.exp(-2j * math.pi * d * xi) for d in digits) / len(digits)


def eval_at_primitive_root(poly, m):
    """|p(zeta)| at a primitive m-th root of unity, chosen coprime to m."""
    k = next(a for a in range(1, m + 1) if math.gcd(a, m) == 1)
    return abs(poly.evaluate(cmath.exp(2j * math.pi * k / m)))


def test_polynomial_basic_arithmetic():
    p = IntPolynomial((-1, 1))
    q = IntPolynomial((1, 1))
    assert p * q == IntPolynomial((-1, 0, 1))
    assert (p + q) == IntPolynomial((0, 2))
    assert p.degree == 1
    assert IntPolynomial(()).is_zero()
    assert IntPolynomial((0, 0)).is_zero()


def test_polynomial_divmod_exact():
    num = IntPolynomial((-1, 0, 0, 0, 0, 0, 1))  # z^6 - 1
    den = IntPolynomial((-1, 1))
    quot, rem = divmod(num, den)
    assert rem.is_zero()
    assert quot * den == num


def test_cyclotomic_base_cases():
    assert cyclotomic(1) == IntPolynomial((-1, 1))
    assert cyclotomic(2) == IntPolynomial((1, 1))
    assert cyclotomic(3) == IntPolynomial((1, 1, 1))
    assert cyclotomic(4) == IntPolynomial((1, 0, 1))


def test_cyclotomic_12():
    # x^4 - x^2 + 1, cross-checked through the divisor-product identity
    # and numerically at a primitive 12th root.
    phi = cyclotomic(12)
    assert phi == IntPolynomial((1, 0, -1, 0, 1))
    product = IntPolynomial((1,))
    for d in (1, 2, 3, 4, 6, 12):
        product = product * cyclotomic(d)
    assert product == IntPolynomial((-1,) + (0,) * 11 + (1,))
    assert eval_at_primitive_root(phi, 12) < 1e-9


def test_cyclotomic_105_has_coefficient_minus_two():
    # smallest index with a coefficient outside {-1, 0, 1}
    assert cyclotomic(105).coeffs[7] == -2


def test_cyclotomic_product_identity_up_to_200():
    for n in range(1, 201):
        product = IntPolynomial((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic(d)
        assert product == IntPolynomial((-1,) + (0,) * (n - 1) + (1,)), n


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(PreconditionError):
        cyclotomic(0)
    with pytest.raises(PreconditionError):
        cyclotomic(-3)


def test_vanishes_at_primitive_root_examples():
    assert vanishes_at_primitive_root(IntPolynomial((1, 1, 1, 1)), 2)
    assert vanishes_at_primitive_root(IntPolynomial((1, 0, 1)), 4)
    p = IntPolynomial.from_exponents([0, 1, 8, 9])
    assert vanishes_at_primitive_root(p, 16)
    assert not vanishes_at_primitive_root(p, 8)
    # numeric corroboration of both verdicts
    assert eval_at_primitive_root(p, 16) < 1e-9
    assert eval_at_primitive_root(p, 8) > 1e-6


def test_vanishes_rejects_zero_polynomial():
    with pytest.raises(PreconditionError):
        vanishes_at_primitive_root(IntPolynomial(()), 3)


@given(
    coeffs=st.lists(st.integers(-5, 5), min_size=1, max_size=8),
    m=st.integers(1, 24),
    shift=st.integers(0, 6),
)
def test_vanishing_invariant_under_exponent_shift(coeffs, m, shift):
    poly = IntPolynomial(coeffs)
    if poly.is_zero():
        return
    assert vanishes_at_primitive_root(poly, m) == vanishes_at_primitive_root(
        poly.shifted(shift), m
    )


def test_digit_polynomial_shifts_and_reduces():
    assert digit_polynomial((-2, 0, 3)) == IntPolynomial((1, 0, 1, 0, 0, 1))
    assert digit_polynomial((0, 5, 10), modulus=5) == IntPolynomial((3,))


@pytest.mark.parametrize(
    "scale,digits,expected",
    [
        (4, (0, 1), {2}),
        (3, (0, 2), set()),
        (6, (0, 1, 2), {2, 4}),
    ],
)
def test_mask_zero_residues_examples(scale, digits, expected):
    system = ScaleDigitSystem(scale, digits)
    assert set(mask_zero_residues(system)) == expected
    # numeric oracle over every residue class representative
    for r in range(1, abs(scale)):
        mag = abs(numeric_symbol(digits, r / scale))
        if r in expected:
            assert mag < 1e-10
        else:
            assert mag > 1e-6


def test_mask_is_sign_insensitive():
    for scale, digits in [(4, (0, 1)), (6, (0, 1, 2)), (5, (0, 2, -2, 11, -11))]:
        pos = mask_zero_residues(ScaleDigitSystem(scale, digits))
        neg = mask_zero_residues(ScaleDigitSystem(-scale, digits))
        assert pos == neg


@given(
    scale=st.integers(2, 9),
    sign=st.sampled_from((1, -1)),
    digits=st.sets(st.integers(-9, 9), min_size=1, max_size=4),
)
def test_mask_matches_numeric_oracle(scale, sign, digits):
    system = ScaleDigitSystem(sign * scale, tuple(digits))
    zeros = mask_zero_residues(system)
    for r in range(1, scale):
        mag = abs(numeric_symbol(system.digits, r / (sign * scale)))
        if r in zeros:
            assert mag < 1e-10
        else:
            assert mag > 1e-6


def test_symbol_vanishes_at_fractions():
    # 1/2 is a zero of the {0,1} symbol; integers never are
    assert symbol_vanishes_at((0, 1), Fraction(1, 2))
    assert not symbol_vanishes_at((0, 1), Fraction(1, 3))
    assert not symbol_vanishes_at((0, 1), 7)
    assert symbol_vanishes_at((0, 1, 2), Fraction(2, 3))
