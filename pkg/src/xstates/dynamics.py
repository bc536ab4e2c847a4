"""Evolution of the three measures and of the discord region under local noise.

Every evolved quantity is a polynomial in u = (1 - p)^2 (and in
sqrt(u) for s and c), so the strengths at which the discord region can
change are roots of low-degree polynomials in u.  :func:`region_sequence`
uses those roots as breakpoints instead of relying on a sampling grid.

Region sequences describe p in [0, 1).  At p = 1 the Bit Flip and
Depolarizing channels drive every state onto a region boundary, so the
endpoint itself is left out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .channels import Channel, ChannelSpec, evolve_arrays, evolve_params
from .measures import (
    Region,
    canonical_transverse,
    coherence_values,
    discord_values,
    entanglement_values,
    region_codes,
)
from .state import DomainError, XStateParams, require_physical

#: Agreement demanded between the per-channel formulas and the measures.
CROSS_CHECK_TOL = 1e-12

_REGIONS = {1: Region.R1, 2: Region.R2, 3: Region.R3}


@dataclass(frozen=True)
class TrajectoryPoint:
    p: float
    params: XStateParams
    E: float
    D: float
    C: float
    region: Region


@dataclass(frozen=True)
class Thresholds:
    """Region thresholds in p.

    ``p1``/``p2`` are present only when the formula is defined and lands in
    [0, 1]; the raw formula values are kept in ``p1_formula``/``p2_formula``
    (None when undefined).
    """

    p1: float | None
    p2: float | None
    p1_formula: float | None
    p2_formula: float | None


class PathKind(str, Enum):
    """Sequence of discord regions visited for p in [0, 1).

    The first five are the Phase Damping paths; ``STAYS_R2`` and
    ``TOWARD_R3`` cover Bit Flip and Depolarizing, where the state moves
    toward Region 3 instead.  ``TOWARD_R3`` collects every sequence not
    named by another member.
    """

    R3_R2_R1 = "R3→R2→R1"
    R3_R1 = "R3→R1"
    STAYS_R3 = "stays-R3"
    R2_R1 = "R2→R1"
    STAYS_R1 = "stays-R1"
    STAYS_R2 = "stays-R2"
    TOWARD_R3 = "R2→R3-family"


_PATHS = {
    (Region.R3, Region.R2, Region.R1): PathKind.R3_R2_R1,
    (Region.R3, Region.R1): PathKind.R3_R1,
    (Region.R3,): PathKind.STAYS_R3,
    (Region.R2, Region.R1): PathKind.R2_R1,
    (Region.R1,): PathKind.STAYS_R1,
    (Region.R2,): PathKind.STAYS_R2,
}


def _measure_arrays(xp0: XStateParams, kind: Channel, p: np.ndarray):
    r1, r2, r3, s, c = evolve_arrays(xp0, kind, p)
    E = entanglement_values(r1, r2, r3, s, c)
    D = discord_values(r1, r2, r3, s)
    C = coherence_values(r1, r2)
    codes = region_codes(r1, r2, r3, s)
    return E, D, C, codes


def region_at(xp0: XStateParams, kind: Channel | str, p: float) -> Region:
    kind = Channel.parse(kind)
    r1, r2, r3, s, _ = evolve_arrays(xp0, kind, p)
    return _REGIONS[int(region_codes(r1, r2, r3, s))]


def closed_form_point(xp0: XStateParams, kind: Channel | str, p: float) -> tuple[float, float, float]:
    """(E, D, C) at strength p from the per-channel expressions in p.

    Entanglement and coherence are written directly in p.  Discord uses
    the region inequalities and the three region expressions
    |r1|/2, |r3|/2 and

        1/2 sqrt((r1^2 (r2^2 + s^2) - r2^2 r3^2) / (r1^2 + s^2 - r3^2)),
        = 1/2 sqrt(r2^2 + s^2 (r1^2 - r2^2) / (r1^2 + s^2 - r3^2)),

    with r1 the larger transverse correlation at that p.  This route is
    independent of the branch-on-Delta form in :mod:`xstates.measures`.
    """
    kind = Channel.parse(kind)
    r1, r2, r3, s, c = xp0.as_tuple()
    eta = 1.0 - p
    u = eta * eta
    if kind is Channel.BIT_FLIP:
        minus = abs(r1 - r2 * u) - math.sqrt(max((1 - r3 * u) ** 2 - (s - c) ** 2 * u, 0.0))
        plus = abs(r1 + r2 * u) - math.sqrt(max((1 + r3 * u) ** 2 - (s + c) ** 2 * u, 0.0))
        C = max(abs(r1), abs(r2) * u)
        a2, b2 = sorted((r1 * r1, r2 * r2 * u * u), reverse=True)
        x3, ss = r3 * r3 * u * u, s * s * u
    elif kind is Channel.PHASE_DAMPING:
        minus = abs(r1 - r2) * u - math.sqrt(max((1 - r3) ** 2 - (s - c) ** 2, 0.0))
        plus = abs(r1 + r2) * u - math.sqrt(max((1 + r3) ** 2 - (s + c) ** 2, 0.0))
        C = max(abs(r1), abs(r2)) * u
        a2, b2 = sorted((r1 * r1 * u * u, r2 * r2 * u * u), reverse=True)
        x3, ss = r3 * r3, s * s
    else:
        minus = abs(r1 - r2) * u - math.sqrt(max((1 - r3 * u) ** 2 - (s - c) ** 2 * u, 0.0))
        plus = abs(r1 + r2) * u - math.sqrt(max((1 + r3 * u) ** 2 - (s + c) ** 2 * u, 0.0))
        C = max(abs(r1), abs(r2)) * u
        a2, b2 = sorted((r1 * r1 * u * u, r2 * r2 * u * u), reverse=True)
        x3, ss = r3 * r3 * u * u, s * s * u
    E = 0.5 * max(0.0, minus, plus)
    if x3 > a2:
        D = 0.5 * math.sqrt(a2)
    elif x3 > b2 + ss:
        D = 0.5 * math.sqrt(x3)
    else:
        # (a2 (b2 + ss) - b2 x3) / den rearranged; the correction is bounded by min(ss, a2 - b2)
        den = a2 + ss - x3
        D = 0.5 * math.sqrt(b2 + ss * (a2 - b2) / den) if den > 0 else 0.5 * math.sqrt(b2)
    return E, D, C


def _check_grid(p_grid: Sequence[float]) -> np.ndarray:
    grid = np.asarray(p_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("p grid must be a non-empty 1-D sequence")
    if np.any(grid < 0) or np.any(grid > 1):
        raise DomainError("p grid must lie in [0, 1]")
    if np.any(np.diff(grid) < 0):
        raise ValueError("p grid must be sorted")
    return grid


def trajectory(xp0: XStateParams, kind: Channel | str, p_grid: Sequence[float]) -> list[TrajectoryPoint]:
    """Evolve ``xp0`` over ``p_grid`` and evaluate the measures at each point.

    Each point is checked against :func:`closed_form_point`; a mismatch
    above ``CROSS_CHECK_TOL`` raises RuntimeError.
    """
    require_physical(xp0)
    kind = Channel.parse(kind)
    grid = _check_grid(p_grid)
    E, D, C, codes = _measure_arrays(xp0, kind, grid)
    out = []
    for i, p in enumerate(grid):
        ref = closed_form_point(xp0, kind, float(p))
        dev = max(abs(ref[0] - E[i]), abs(ref[1] - D[i]), abs(ref[2] - C[i]))
        if dev > CROSS_CHECK_TOL:
            raise RuntimeError(f"closed form and measures disagree by {dev:.3g} at p={p}")
        params = evolve_params(xp0, ChannelSpec(kind, float(p)))
        out.append(TrajectoryPoint(float(p), params, float(E[i]), float(D[i]), float(C[i]), _REGIONS[int(codes[i])]))
    return out


def _present(value: float | None) -> float | None:
    if value is None or not 0.0 <= value <= 1.0:
        return None
    return value


def region_thresholds(xp0: XStateParams, kind: Channel | str) -> Thresholds:
    """Strengths at which the discord region changes, from the closed-form thresholds.

    Phase Damping:  p1 = 1 - sqrt(|r3|/|r1|),  p2 = 1 - ((r3^2 - s^2)/r2^2)^(1/4)
    Bit Flip:       p1 = 1 - sqrt(|r1|/|r3|),  p2 = 1 - sqrt(s^2/(r3^2 - r2^2))
    Depolarizing:   p2 = 1 - sqrt(s^2/(r3^2 - r2^2)) only

    For Phase Damping and Depolarizing both transverse correlations shrink
    by the same factor, so r1 and r2 are taken in the order |r1| >= |r2|.
    Bit Flip leaves r1 fixed and the expressions use the given labels.
    """
    kind = Channel.parse(kind)
    r1, r2, r3, s, _ = xp0.as_tuple()
    if kind is not Channel.BIT_FLIP:
        r1, r2 = (float(v) for v in canonical_transverse(r1, r2))
    p1f = p2f = None
    if kind is Channel.PHASE_DAMPING:
        if r1 != 0:
            p1f = 1 - math.sqrt(abs(r3) / abs(r1))
        if r2 * r2 > 0 and r3 * r3 - s * s >= 0:
            p2f = 1 - ((r3 * r3 - s * s) / (r2 * r2)) ** 0.25
    else:
        if kind is Channel.BIT_FLIP and r3 != 0:
            p1f = 1 - math.sqrt(abs(r1) / abs(r3))
        if r3 * r3 > r2 * r2:
            p2f = 1 - math.sqrt(s * s / (r3 * r3 - r2 * r2))
    return Thresholds(_present(p1f), _present(p2f), p1f, p2f)


def _square_coefficients(xp0: XStateParams, kind: Channel):
    """Squares of r1', r2', r3', s' as coefficient vectors (c0, c1, c2) in u."""
    r1, r2, r3, s, _ = xp0.as_tuple()

    def poly(value: float, degree: int) -> np.ndarray:
        out = np.zeros(3)
        out[degree] = value * value
        return out

    if kind is Channel.BIT_FLIP:
        return poly(r1, 0), poly(r2, 2), poly(r3, 2), poly(s, 1)
    if kind is Channel.PHASE_DAMPING:
        return poly(r1, 2), poly(r2, 2), poly(r3, 0), poly(s, 0)
    return poly(r1, 2), poly(r2, 2), poly(r3, 2), poly(s, 1)


def region_breakpoints(xp0: XStateParams, kind: Channel | str) -> list[float]:
    """Strengths in (0, 1) where any region inequality can change sign."""
    kind = Channel.parse(kind)
    x1, x2, x3, ss = _square_coefficients(xp0, kind)
    found = set()
    for f in (x3 - x1, x3 - x2, x1 - x2, x3 - x2 - ss, x3 - x1 - ss):
        # negligible leading terms only move a root far beyond u = 1
        scale = np.max(np.abs(f))
        coeffs = np.trim_zeros(np.where(np.abs(f) > 1e-14 * scale, f, 0.0)[::-1], "f")
        if coeffs.size < 2:
            continue
        for root in np.roots(coeffs):
            if abs(root.imag) > 1e-12:
                continue
            u = root.real
            if 0.0 < u < 1.0:
                found.add(1.0 - math.sqrt(u))
    return sorted(p for p in found if 0.0 < p < 1.0)


def _compress(labels) -> tuple[Region, ...]:
    out: list[Region] = []
    for lab in labels:
        if not out or out[-1] != lab:
            out.append(lab)
    return tuple(out)


def region_sequence(xp0: XStateParams, kind: Channel | str) -> tuple[Region, ...]:
    """Regions visited for p in [0, 1), in order.

    Regions are evaluated at p = 0 and inside every interval between
    consecutive breakpoints.  Single-point visits at a breakpoint are
    ignored.
    """
    require_physical(xp0)
    kind = Channel.parse(kind)
    edges = [0.0, *region_breakpoints(xp0, kind), 1.0]
    probes = [0.0] + [0.5 * (a + b) for a, b in zip(edges[:-1], edges[1:])]
    return _compress(region_at(xp0, kind, p) for p in probes)


def _is_subsequence(short, long) -> bool:
    it = iter(long)
    return all(item in it for item in short)


def classify_path(xp0: XStateParams, kind: Channel | str, n_check: int = 1000) -> PathKind:
    """Name the path through the discord regions.

    The breakpoint-based sequence is checked against ``n_check`` uniform
    samples in [0, 1): the sampled sequence must be a subsequence of it
    (a region visited for less than the grid spacing can be missed).
    """
    kind = Channel.parse(kind)
    seq = region_sequence(xp0, kind)
    grid = np.linspace(0.0, 1.0, n_check + 1)[:-1]
    *_, codes = _measure_arrays(xp0, kind, grid)
    sampled = _compress(_REGIONS[int(k)] for k in codes)
    if not _is_subsequence(sampled, seq):
        raise RuntimeError(f"sampled regions {sampled} disagree with breakpoints {seq}")
    return _PATHS.get(seq, PathKind.TOWARD_R3)


def locate_region_flips(xp0: XStateParams, kind: Channel | str, tol: float = 1e-13) -> list[tuple[float, Region, Region]]:
    """Strengths where the region changes, each refined by bisection to ``tol``."""
    require_physical(xp0)
    kind = Channel.parse(kind)
    edges = [0.0, *region_breakpoints(xp0, kind), 1.0]
    probes = [0.0] + [0.5 * (a + b) for a, b in zip(edges[:-1], edges[1:])]
    labels = [region_at(xp0, kind, p) for p in probes]
    flips = []
    for (lo, a), (hi, b) in zip(zip(probes, labels), zip(probes[1:], labels[1:])):
        if a == b:
            continue
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if region_at(xp0, kind, mid) == a:
                lo = mid
            else:
                hi = mid
        flips.append((0.5 * (lo + hi), a, b))
    return flips


def coherence_crossover(xp0: XStateParams, kind: Channel | str) -> float | None:
    """Bit Flip strength where |r2|(1-p)^2 falls to |r1|; None if it never does.

    Past this point coherence stays at |r1|.  Under the other channels
    the larger transverse correlation never changes, so there is none.
    """
    kind = Channel.parse(kind)
    if kind is not Channel.BIT_FLIP:
        return None
    r1, r2 = abs(xp0.r1), abs(xp0.r2)
    if r2 <= r1:
        return None
    return 1.0 - math.sqrt(r1 / r2)


def entanglement_death(xp0: XStateParams, kind: Channel | str, tol: float = 1e-13) -> float | None:
    """Smallest p beyond which entanglement stays zero.

    Returns 0.0 for a separable start and None if the state is still
    entangled at p = 1.
    """
    require_physical(xp0)
    kind = Channel.parse(kind)

    def ent(p: float) -> float:
        return float(entanglement_values(*evolve_arrays(xp0, kind, p)))

    if ent(0.0) <= 0.0:
        return 0.0
    if ent(1.0) > 0.0:
        return None
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ent(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return hi
