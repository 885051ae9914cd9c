"""Exact decisions about compatible (digit, candidate) pairs.

A pair (D/N, S) with |S| = |D| is compatible when the matrix
[(1/sqrt(q)) * e(d*s/N)] is unitary; equivalently, when the scaled symbol
m_{D/N} vanishes at every difference of distinct elements of S.  The
difference test is what gets decided here, exactly, through the cyclotomic
residue mask -- floating point never touches the verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import mask_zero_residues
from .systems import (
    BudgetExceededError,
    ConsistencyError,
    PreconditionError,
    ScaleDigitSystem,
    SpectrumCandidate,
)


@dataclass(frozen=True)
class CompatibilityCertificate:
    """Proof object for a compatible pair.

    `zero_differences` lists one entry (s1, s2, m) per unordered pair of
    distinct candidate elements: the symbol vanishes at s1 - s2 because the
    m-th cyclotomic polynomial divides the reduced digit polynomial, with
    m = |N| / gcd(s2 - s1, |N|).
    """

    system: ScaleDigitSystem
    candidate: SpectrumCandidate
    zero_differences: tuple[tuple[int, int, int], ...]


def is_compatible(
    system: ScaleDigitSystem, candidate: SpectrumCandidate
) -> CompatibilityCertificate | None:
    """Certificate that (D/N, S) is a compatible pair, or None.

    The decision is exact: each difference residue is looked up in the
    cyclotomically computed zero mask.
    """
    if candidate.size != system.size:
        raise PreconditionError(
            f"compatible pairs require |S| = |D|, got |S| = {candidate.size}, |D| = {system.size}"
        )
    m = system.modulus
    zeros = mask_zero_residues(system)
    elems = candidate.elements
    entries = []
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            r = (elems[j] - elems[i]) % m
            if r == 0 or r not in zeros:
                return None
            entries.append((elems[i], elems[j], m // math.gcd(r, m)))
    return CompatibilityCertificate(system, candidate, tuple(entries))


def search_candidate_s(system: ScaleDigitSystem) -> list[SpectrumCandidate]:
    """All compatible candidate sets inside the reduction window.

    Enumerates every S with 0 in S, |S| = |D| and S a subset of
    [2-|N|, |N|-2] such that (D/N, S) is compatible.  This is clique
    enumeration through the vertex 0 in the graph on window integers whose
    edges are pairs with difference residue in the zero mask; results come
    back in lexicographic order of their sorted elements.
    """
    m = system.modulus
    if m < 3:
        raise PreconditionError(
            "the window [2-|N|, |N|-2] is degenerate for |N| = 2; "
            "the measure-level report handles that case separately"
        )
    zeros = mask_zero_residues(system)
    window = list(range(2 - m, m - 1))
    want = system.size
    found: list[SpectrumCandidate] = []

    def extend(partial: list[int], start: int) -> None:
        if len(partial) == want:
            if 0 in partial:
                found.append(SpectrumCandidate(tuple(partial)))
            return
        for k in range(start, len(window)):
            if len(window) - k < want - len(partial):
                break
            e = window[k]
            if e > 0 and 0 not in partial:
                break  # elements ascend, so 0 can no longer be added
            if all((e - p) % m in zeros for p in partial):
                partial.append(e)
                extend(partial, k + 1)
                partial.pop()

    extend([], 0)
    return found


def reduce_s(scale: int, candidate: SpectrumCandidate) -> SpectrumCandidate:
    """Congruent representative of S inside the window [2-|N|, |N|-2].

    Each element maps to its residue r in [0, |N|), kept as r when
    r <= |N|-2 and as r - |N| otherwise.  Element-wise congruence mod N
    preserves compatibility, so the reduced set is compatible exactly when
    the input is.
    """
    m = abs(scale)
    if m < 3:
        raise PreconditionError("reduction needs |N| >= 3; the window is degenerate for |N| = 2")
    elems = candidate.elements
    if 0 not in elems:
        raise PreconditionError("reduction assumes 0 in S; translate the candidate first")
    residues = [s % m for s in elems]
    if len(set(residues)) != len(elems):
        raise PreconditionError(
            "candidate elements repeat modulo N, so the pair cannot be compatible"
        )
    return SpectrumCandidate(tuple(r if r <= m - 2 else r - m for r in residues))


def pair_power(
    system: ScaleDigitSystem,
    candidate: SpectrumCandidate,
    k: int,
    budget: int = 1_000_000,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The k-fold pair (D_k, S_k) with X_k = X + N*X + ... + N^(k-1)*X.

    Both Minkowski sums are returned sorted, and the powered pair is
    re-certified compatible against the scale N^k before returning.
    """
    if not isinstance(k, int) or k < 1:
        raise PreconditionError(f"power must be a positive integer, got {k!r}")
    if is_compatible(system, candidate) is None:
        raise PreconditionError("pair powers are defined for compatible pairs only")
    if system.size**k > budget:
        raise BudgetExceededError(
            f"|D|^k = {system.size}^{k} exceeds the result-size budget {budget}"
        )

    def minkowski(base: tuple[int, ...]) -> tuple[int, ...]:
        acc = {0}
        power = 1
        for _ in range(k):
            acc = {x + power * b for x in acc for b in base}
            power *= system.scale
        return tuple(sorted(acc))

    digits_k = minkowski(system.digits)
    elements_k = minkowski(candidate.elements)
    powered = ScaleDigitSystem(system.scale**k, digits_k)
    if is_compatible(powered, SpectrumCandidate(elements_k)) is None:
        raise ConsistencyError("powered pair failed its exact compatibility re-check")
    return digits_k, elements_k
