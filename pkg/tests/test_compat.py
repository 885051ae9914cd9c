import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cantorspec import (
    BudgetExceededError,
    PreconditionError,
    ScaleDigitSystem,
    SpectrumCandidate,
    is_compatible,
    pair_power,
    reduce_s,
    search_candidate_s,
    symbol_eval,
)

CERTIFIED_PAIRS = [
    (4, (0, 1), (0, 2)),
    (4, (0, 1), (-2, 0)),
    (4, (0, 1), (0, 6)),
    (6, (0, 1, 2), (0, 2, 4)),
    (6, (0, 1, 2), (0, -2, 2)),
    (6, (0, 1, 2), (0, 4, 8)),
    (5, (0, 2, -2, 11, -11), (0, 1, -1, 2, -2)),
    (10, (0, 2, -2, 11, -11), (0, 2, 4, 6, 8)),
    (2, (0, 1), (0, 1)),
    (4, (0, 2), (0, 1)),
]

REJECTED_PAIRS = [
    (3, (0, 2), (0, 1)),
    (4, (0, 1), (0, 1)),
    (6, (0, 1, 2), (0, 1, 2)),
]


def unitarity_defect(scale, digits, candidate):
    """max |M M* - I| for M = (1/sqrt(q)) [e(d*s/N)] -- the numeric oracle."""
    q = len(digits)
    matrix = np.exp(2j * np.pi * np.outer(digits, candidate) / scale) / np.sqrt(q)
    return np.abs(matrix @ matrix.conj().T - np.eye(q)).max()


@pytest.mark.parametrize("scale,digits,candidate", CERTIFIED_PAIRS)
def test_certified_pairs(scale, digits, candidate):
    system = ScaleDigitSystem(scale, digits)
    cert = is_compatible(system, SpectrumCandidate(candidate))
    assert cert is not None
    assert unitarity_defect(scale, digits, candidate) < 1e-10
    # certificate covers every unordered pair, orders divide |N|
    assert len(cert.zero_differences) == len(candidate) * (len(candidate) - 1) // 2
    for _, _, order in cert.zero_differences:
        assert abs(scale) % order == 0
    # elements distinct modulo N on both sides
    assert len({d % abs(scale) for d in digits}) == len(digits)
    assert len({s % abs(scale) for s in candidate}) == len(candidate)


@pytest.mark.parametrize("scale,digits,candidate", REJECTED_PAIRS)
def test_rejected_pairs(scale, digits, candidate):
    system = ScaleDigitSystem(scale, digits)
    assert is_compatible(system, SpectrumCandidate(candidate)) is None
    assert unitarity_defect(scale, digits, candidate) > 1e-6


def test_compatibility_requires_matching_sizes():
    with pytest.raises(PreconditionError):
        is_compatible(ScaleDigitSystem(4, (0, 1)), SpectrumCandidate((0,)))


def test_sum_of_squares_identity():
    # compatible pairs make sum_s |m_{D/N}(xi+s)|^2 identically 1;
    # rejected pairs must violate it somewhere by a visible margin
    rng = random.Random(5)
    for scale, digits, candidate in CERTIFIED_PAIRS:
        for _ in range(25):
            xi = rng.random()
            total = sum(
                abs(symbol_eval(digits, (xi + s) / scale)) ** 2 for s in candidate
            )
            assert abs(total - 1) < 1e-9
    for scale, digits, candidate in REJECTED_PAIRS:
        worst = 0.0
        for k in range(50):
            xi = k / 50
            total = sum(
                abs(symbol_eval(digits, (xi + s) / scale)) ** 2 for s in candidate
            )
            worst = max(worst, abs(total - 1))
        assert worst > 1e-6


def brute_force_window_candidates(system):
    """Independent numeric search: all window subsets passing unitarity."""
    m = system.modulus
    window = range(2 - m, m - 1)
    out = []
    for combo in itertools.combinations(window, system.size):
        if 0 not in combo:
            continue
        if unitarity_defect(system.scale, system.digits, combo) < 1e-8:
            out.append(tuple(combo))
    return out


@pytest.mark.parametrize(
    "scale,digits",
    [(4, (0, 1)), (3, (0, 2)), (6, (0, 1, 2)), (5, (0, 1, 2, 3, 4)), (-4, (0, 1))],
)
def test_search_matches_brute_force(scale, digits):
    system = ScaleDigitSystem(scale, digits)
    found = [cand.elements for cand in search_candidate_s(system)]
    assert found == brute_force_window_candidates(system)


def test_search_examples():
    assert [c.elements for c in search_candidate_s(ScaleDigitSystem(4, (0, 1)))] == [
        (-2, 0),
        (0, 2),
    ]
    assert search_candidate_s(ScaleDigitSystem(3, (0, 2))) == []
    found = [c.elements for c in search_candidate_s(ScaleDigitSystem(6, (0, 1, 2)))]
    # lexicographic order; contains both named spectra plus the dilated
    # window set (-4, 0, 4), which the numeric oracle certifies as well
    assert found == [(-4, -2, 0), (-4, 0, 4), (-2, 0, 2), (0, 2, 4)]
    assert (0, 2, 4) in found and (0, -2, 2) not in found  # -2 < 0 sorts first


def test_search_rejects_degenerate_window():
    with pytest.raises(PreconditionError):
        search_candidate_s(ScaleDigitSystem(2, (0, 1)))


def test_reduce_examples():
    assert reduce_s(6, SpectrumCandidate((0, 4, 8))).elements == (0, 2, 4)
    assert reduce_s(4, SpectrumCandidate((0, 6))).elements == (0, 2)
    assert reduce_s(9, SpectrumCandidate((0,))).elements == (0,)


def test_reduce_errors():
    with pytest.raises(PreconditionError):
        reduce_s(4, SpectrumCandidate((0, 4)))  # repeated residue
    with pytest.raises(PreconditionError):
        reduce_s(4, SpectrumCandidate((1, 2)))  # 0 not in S
    with pytest.raises(PreconditionError):
        reduce_s(2, SpectrumCandidate((0, 1)))  # degenerate window


def test_reduce_preserves_compatibility():
    for scale, digits, candidate in CERTIFIED_PAIRS:
        if abs(scale) < 3 or 0 not in candidate:
            continue
        system = ScaleDigitSystem(scale, digits)
        reduced = reduce_s(scale, SpectrumCandidate(candidate))
        assert is_compatible(system, reduced) is not None
        assert all(2 - abs(scale) <= r <= abs(scale) - 2 for r in reduced.elements)
        assert {r % abs(scale) for r in reduced.elements} == {
            s % abs(scale) for s in candidate
        }
        assert unitarity_defect(scale, digits, reduced.elements) < 1e-10


def test_pair_power_identity_and_examples():
    system = ScaleDigitSystem(4, (0, 1))
    candidate = SpectrumCandidate((0, 2))
    assert pair_power(system, candidate, 1) == ((0, 1), (0, 2))
    assert pair_power(system, candidate, 2) == ((0, 1, 4, 5), (0, 2, 8, 10))

    def expansion_oracle(base, scale, k):
        return tuple(
            sorted(
                {
                    sum(c * scale**j for j, c in enumerate(combo))
                    for combo in itertools.product(base, repeat=k)
                }
            )
        )

    system6 = ScaleDigitSystem(6, (0, 1, 2))
    cand6 = SpectrumCandidate((0, 2, 4))
    digits_2, elements_2 = pair_power(system6, cand6, 2)
    assert digits_2 == expansion_oracle((0, 1, 2), 6, 2)
    assert elements_2 == expansion_oracle((0, 2, 4), 6, 2)
    assert digits_2 == (0, 1, 2, 6, 7, 8, 12, 13, 14)
    assert elements_2 == (0, 2, 4, 12, 14, 16, 24, 26, 28)


def test_pair_power_certified_at_powered_scale():
    for scale, digits, candidate in CERTIFIED_PAIRS[:6]:
        system = ScaleDigitSystem(scale, digits)
        for k in (2, 3):
            digits_k, elements_k = pair_power(system, SpectrumCandidate(candidate), k)
            powered = ScaleDigitSystem(scale**k, digits_k)
            assert is_compatible(powered, SpectrumCandidate(elements_k)) is not None


def test_pair_power_preconditions():
    with pytest.raises(PreconditionError):
        pair_power(ScaleDigitSystem(3, (0, 2)), SpectrumCandidate((0, 1)), 2)
    with pytest.raises(BudgetExceededError):
        pair_power(ScaleDigitSystem(4, (0, 1)), SpectrumCandidate((0, 2)), 2, budget=3)


@given(
    shift_d=st.integers(-3, 3),
    shift_s=st.integers(-7, 7),
    pair=st.sampled_from(CERTIFIED_PAIRS + REJECTED_PAIRS),
)
def test_translation_invariance(shift_d, shift_s, pair):
    scale, digits, candidate = pair
    system = ScaleDigitSystem(scale, digits)
    base = is_compatible(system, SpectrumCandidate(candidate)) is not None
    moved_system = ScaleDigitSystem(scale, tuple(d + scale * shift_d for d in digits))
    moved_candidate = SpectrumCandidate(tuple(s + shift_s for s in candidate))
    assert (is_compatible(moved_system, moved_candidate) is not None) == base


@given(
    index=st.integers(0, 5),
    step=st.integers(-4, 4),
    pair=st.sampled_from(CERTIFIED_PAIRS + REJECTED_PAIRS),
)
def test_residue_invariance(index, step, pair):
    scale, digits, candidate = pair
    elems = list(candidate)
    i = index % len(elems)
    elems[i] += scale * step
    if len(set(elems)) != len(elems):
        return
    system = ScaleDigitSystem(scale, digits)
    base = is_compatible(system, SpectrumCandidate(candidate)) is not None
    assert (is_compatible(system, SpectrumCandidate(tuple(elems))) is not None) == base
