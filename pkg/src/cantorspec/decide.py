"""Spectrality decisions through the integer-cycle criterion.

For a compatible pair with 0 in D, gcd(D) = 1 and 0 in S, the candidate
spectrum fails to be a spectrum exactly when the successor map
eta -> (eta + s)/N (the unique s in S making the division exact) admits a
cycle of nonzero integers.  Any such cycle lives inside the exact rational
enclosure of the attractor of the maps x -> (x+s)/N, so the search space
is the finite set of nonzero integers in that interval: a functional graph
walked with memoized dead-ends.  Both outcomes carry machine-checkable
evidence -- the witness cycle, or the exhaustively searched range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .compat import CompatibilityCertificate, is_compatible, search_candidate_s
from .kernel import attractor_bounds
from .systems import (
    PreconditionError,
    RationalInterval,
    ScaleDigitSystem,
    SpectrumCandidate,
)


@dataclass(frozen=True)
class CanonicalForm:
    """Affine normal form of a digit set: digits = offset + scale_factor * reduced."""

    reduced_digits: tuple[int, ...]
    offset: int
    scale_factor: int


def canonicalize_digits(digits) -> CanonicalForm:
    """Translate and rescale a digit set so that 0 is a digit and gcd is 1.

    Subtracts the minimum, then divides by the gcd of the translated set
    (taken as 1 for the singleton {0}).  Spectra transform along: scaling
    the digits by a scales any spectrum by 1/a, and translation leaves
    spectra untouched.
    """
    digs = tuple(digits)
    if not digs:
        raise PreconditionError("digit set must be nonempty")
    if len(set(digs)) != len(digs):
        raise PreconditionError("digit set must be pairwise distinct")
    offset = min(digs)
    translated = tuple(sorted(d - offset for d in digs))
    factor = math.gcd(*translated) or 1
    return CanonicalForm(tuple(d // factor for d in translated), offset, factor)


def successor(scale: int, candidate: SpectrumCandidate, eta: int) -> tuple[int, int] | None:
    """The unique step (eta', s) with eta' = (eta + s)/N exact, if any.

    At most one candidate element can qualify because the elements are
    required to be distinct modulo N; without that the map would be
    multivalued, so the condition is checked.
    """
    if eta == 0:
        raise PreconditionError("successor is defined for nonzero integers only")
    m = abs(scale)
    elems = candidate.elements
    if len({s % m for s in elems}) != len(elems):
        raise PreconditionError(
            "successor is single-valued only when S is distinct modulo N"
        )
    for s in elems:
        quot, rem = divmod(eta + s, scale)
        if rem == 0:
            return quot, s
    return None


@dataclass(frozen=True)
class SpectrumVerdict:
    """Outcome of the cycle search.

    Spectral verdicts carry the inclusive integer range that was searched
    exhaustively; negative verdicts carry the witness cycle as pairs
    (eta_j, s_j) with eta_{j+1} = (eta_j + s_j)/N cyclically.
    """

    spectral: bool
    witness: tuple[tuple[int, int], ...] | None
    searched: tuple[int, int]
    bounds: RationalInterval


def decide_spectrum(
    system: ScaleDigitSystem,
    candidate: SpectrumCandidate,
    range_factor: int = 1,
) -> SpectrumVerdict:
    """Decide whether the candidate generates a spectrum for the measure.

    Preconditions (each reported separately): 0 in D; gcd(D) = 1 (the
    degenerate point mass D = {0} is admitted); 0 in S; and (D/N, S)
    compatible.  Start nodes are taken in increasing absolute value with
    ties negative first, so the reported cycle is deterministic.
    `range_factor` dilates the searched interval and exists purely as a
    regression hook: enlarging the range must never flip a spectral verdict.
    """
    digits = system.digits
    if 0 not in digits:
        raise PreconditionError("cycle criterion requires 0 in D; canonicalize the digits first")
    if math.gcd(*digits) != 1 and digits != (0,):
        raise PreconditionError(
            f"cycle criterion requires gcd(D) = 1, got gcd = {math.gcd(*digits)}"
        )
    if 0 not in candidate.elements:
        raise PreconditionError("cycle criterion requires 0 in S")
    if is_compatible(system, candidate) is None:
        raise PreconditionError("cycle criterion applies to compatible pairs only")

    bounds = attractor_bounds(system.scale, candidate.elements)
    searched = bounds.scaled(range_factor) if range_factor != 1 else bounds
    lo = math.ceil(searched.lo)
    hi = math.floor(searched.hi)
    nodes = sorted((eta for eta in range(lo, hi + 1) if eta != 0), key=lambda e: (abs(e), e))

    dead: set[int] = set()
    for start in nodes:
        if start in dead:
            continue
        path: list[tuple[int, int]] = []
        position: dict[int, int] = {}
        cur = start
        while True:
            if cur in position:
                cycle = path[position[cur] :]
                first = min(range(len(cycle)), key=lambda i: (abs(cycle[i][0]), cycle[i][0]))
                witness = tuple(cycle[first:] + cycle[:first])
                return SpectrumVerdict(False, witness, (lo, hi), bounds)
            if cur == 0 or cur in dead or not lo <= cur <= hi:
                dead.update(eta for eta, _ in path)
                break
            step = successor(system.scale, candidate, cur)
            if step is None:
                dead.update(eta for eta, _ in path)
                dead.add(cur)
                break
            position[cur] = len(path)
            path.append((cur, step[1]))
            cur = step[0]
    return SpectrumVerdict(True, None, (lo, hi), bounds)


def verify_witness(system: ScaleDigitSystem, candidate: SpectrumCandidate, witness) -> bool:
    """Check a claimed cycle independently of how it was produced.

    True iff the witness is a nonempty list of (eta, s) pairs of integers
    with every eta nonzero, every s in S, and eta_j + s_j = N * eta_{j+1}
    exactly (indices cyclic).
    """
    entries = [tuple(entry) for entry in witness]
    if not entries:
        return False
    allowed = set(candidate.elements)
    for entry in entries:
        if len(entry) != 2:
            return False
        eta, s = entry
        if not isinstance(eta, int) or isinstance(eta, bool) or eta == 0:
            return False
        if s not in allowed:
            return False
    for j, (eta, s) in enumerate(entries):
        eta_next = entries[(j + 1) % len(entries)][0]
        if eta + s != system.scale * eta_next:
            return False
    return True


STATUS_SPECTRAL = "spectral-with-certificate"
STATUS_UNIT_INTERVAL = "unit-interval"
STATUS_UNKNOWN = "no-compatible-pair-found"


@dataclass(frozen=True)
class SpectralityReport:
    """Measure-level verdict.

    `spectral-with-certificate` bundles a window candidate, its
    compatibility certificate and a spectral cycle verdict for the
    canonicalized system; the affine canonical form is always included so
    callers can map the spectrum back (digits scaled by a scale any
    spectrum by 1/a).  `unit-interval` marks |N| = 2 with reduced digits
    {0, 1}, where the measure is Lebesgue on a unit interval and the
    spectrum is all of the integers.  `no-compatible-pair-found` means the
    search was exhaustive and empty: spectrality is undecided by this tool,
    not refuted.
    """

    status: str
    scale: int
    canonical: CanonicalForm
    candidate: SpectrumCandidate | None = None
    certificate: CompatibilityCertificate | None = None
    verdict: SpectrumVerdict | None = None


def report_measure_spectrality(system: ScaleDigitSystem) -> SpectralityReport:
    """Canonicalize the digits, then search the window for a spectrum.

    For |N| = 2 only the unit-interval digits {0, 1} (after
    canonicalization) and the point mass {0} admit compatible candidates;
    anything larger repeats residues mod 2 and is reported undecided.  For
    |N| >= 3 the window candidates are tried in deterministic order and
    the first spectral one is certified.
    """
    canon = canonicalize_digits(system.digits)
    reduced = ScaleDigitSystem(system.scale, canon.reduced_digits)
    if system.modulus == 2:
        if canon.reduced_digits == (0, 1):
            return SpectralityReport(STATUS_UNIT_INTERVAL, system.scale, canon)
        if canon.reduced_digits != (0,):
            return SpectralityReport(STATUS_UNKNOWN, system.scale, canon)
        candidates = [SpectrumCandidate((0,))]
    else:
        candidates = search_candidate_s(reduced)
    for cand in candidates:
        verdict = decide_spectrum(reduced, cand)
        if verdict.spectral:
            certificate = is_compatible(reduced, cand)
            return SpectralityReport(
                STATUS_SPECTRAL, system.scale, canon, cand, certificate, verdict
            )
    return SpectralityReport(STATUS_UNKNOWN, system.scale, canon)
