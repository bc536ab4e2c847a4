"""Closed-form trace-norm entanglement, discord and l1 coherence of X states.

Discord follows the one-sided trace-distance closed form for X states,
normalised so that a Bell-diagonal state gives half its intermediate
|r_i|.  That closed form presumes |r1| >= |r2|; since a local rotation
about z on the first qubit exchanges the two transverse correlations
without changing the discord, inputs are reordered first.

The scalar functions take :class:`~xstates.state.XStateParams`; the
``*_values`` variants broadcast over numpy arrays and skip the
physicality check.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .state import XStateParams, require_physical


class Region(str, Enum):
    """Cells of parameter space where discord has a single closed form."""

    R1 = "Region1"
    R2 = "Region2"
    R3 = "Region3"

    @property
    def short(self) -> str:
        return "R" + self.value[-1]


def intermediate(a: float, b: float, c: float) -> float:
    """Median of three values (a repeated value counts twice)."""
    return sorted((a, b, c))[1]


def canonical_transverse(r1, r2):
    """Reorder (r1, r2) so that the first entry has the larger magnitude."""
    r1, r2 = np.asarray(r1, dtype=float), np.asarray(r2, dtype=float)
    swap = np.abs(r2) > np.abs(r1)
    return np.where(swap, r2, r1), np.where(swap, r1, r2)


def entanglement_values(r1, r2, r3, s, c):
    """E = 1/2 max(0, |r1-r2| - sqrt((1-r3)^2-(s-c)^2), |r1+r2| - sqrt((1+r3)^2-(s+c)^2))."""
    r1, r2, r3, s, c = (np.asarray(v, dtype=float) for v in (r1, r2, r3, s, c))
    minus = np.abs(r1 - r2) - np.sqrt(np.maximum((1 - r3) ** 2 - (s - c) ** 2, 0.0))
    plus = np.abs(r1 + r2) - np.sqrt(np.maximum((1 + r3) ** 2 - (s + c) ** 2, 0.0))
    return 0.5 * np.maximum(0.0, np.maximum(minus, plus))


def coherence_values(r1, r2):
    return np.maximum(np.abs(np.asarray(r1, dtype=float)), np.abs(np.asarray(r2, dtype=float)))


def discord_values(r1, r2, r3, s):
    """Trace-distance discord; does not depend on c.

    For Delta = r3^2 - r1^2 - s^2 > 0 the value is |r1|/2.  Otherwise the
    squared ratio under the root,

        (r1^2 M - r2^2 m) / (M - m + r1^2 - r2^2),
        M = max(r3^2, r2^2 + s^2),  m = min(r3^2, r1^2),

    is rewritten as the weighted mean (r1^2 a + m b) / (a + b) with
    a = M - m >= 0 and b = r1^2 - r2^2 >= 0, which is well conditioned
    near a + b = 0.  At a + b = 0 (|r1| = |r2| = |r3|, s = 0) both means
    coincide with r1^2.
    """
    r1, r2 = canonical_transverse(r1, r2)
    r3, s = np.asarray(r3, dtype=float), np.asarray(s, dtype=float)
    x1, x2, x3, ss = r1**2, r2**2, r3**2, s**2
    big = np.maximum(x3, x2 + ss)
    small = np.minimum(x3, x1)
    a = big - small
    b = x1 - x2
    w = a + b
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(w > 0, (x1 * a + small * b) / np.where(w > 0, w, 1.0), x1)
    inner = 0.5 * np.sqrt(np.maximum(ratio, 0.0))
    return np.where(x3 - x1 - ss > 0, 0.5 * np.abs(r1), inner)


def region_codes(r1, r2, r3, s):
    """1, 2 or 3 for each input (see :func:`discord_region`)."""
    r1, r2 = canonical_transverse(r1, r2)
    r3, s = np.asarray(r3, dtype=float), np.asarray(s, dtype=float)
    return np.where(np.abs(r3) > np.abs(r1), 1, np.where(r3**2 > r2**2 + s**2, 2, 3))


def entanglement(xp: XStateParams) -> float:
    require_physical(xp)
    return float(entanglement_values(*xp.as_tuple()))


def coherence(xp: XStateParams) -> float:
    """l1 coherence max(|r1|, |r2|); defined for any parameters."""
    return float(coherence_values(xp.r1, xp.r2))


def discord(xp: XStateParams) -> float:
    require_physical(xp)
    return float(discord_values(xp.r1, xp.r2, xp.r3, xp.s))


def discord_region(xp: XStateParams) -> Region:
    """Region 1 if |r3| > |r1|; else Region 2 if r3^2 > r2^2 + s^2; else Region 3.

    r1 here is the larger-magnitude transverse correlation.
    """
    require_physical(xp)
    return Region(f"Region{int(region_codes(xp.r1, xp.r2, xp.r3, xp.s))}")
