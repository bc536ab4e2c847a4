"""Grids over state space: existence region, separable region, regions of
discord, and maps of each measure over the (s, c) plane.

Grids are node-centred with both endpoints included.  Values are stored
with ``indexing="ij"``, so flattening in C order gives row-major output
with the last axis varying fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .measures import coherence_values, discord_values, entanglement_values, region_codes
from .state import CorrelationVector, physical_mask

Measure = Literal["E", "D", "C"]

#: Entanglement at or below this value counts as zero.
SEPARABLE_TOL = 1e-12


def _axis(n: int) -> np.ndarray:
    if n < 2:
        raise ValueError(f"grid size must be at least 2, got {n}")
    return np.linspace(-1.0, 1.0, n)


@dataclass(frozen=True)
class Field3D:
    """Values on an (r1, r2, r3) grid at fixed s and c."""

    axes: tuple[np.ndarray, np.ndarray, np.ndarray]
    values: np.ndarray
    s: float
    c: float

    def rows(self) -> Iterator[tuple[float, float, float, float]]:
        g1, g2, g3 = np.meshgrid(*self.axes, indexing="ij")
        yield from zip(g1.ravel(), g2.ravel(), g3.ravel(), self.values.ravel())


@dataclass(frozen=True)
class Field2D:
    """Values on an (s, c) grid at fixed r; NaN marks unphysical nodes."""

    axes: tuple[np.ndarray, np.ndarray]
    values: np.ndarray
    r: CorrelationVector

    def rows(self) -> Iterator[tuple[float, float, float]]:
        gs, gc = np.meshgrid(*self.axes, indexing="ij")
        yield from zip(gs.ravel(), gc.ravel(), self.values.ravel())


def _r_mesh(n: int):
    ax = _axis(n)
    return (ax, ax.copy(), ax.copy()), np.meshgrid(ax, ax, ax, indexing="ij")


def existence_grid(s: float, c: float, n: int = 101) -> Field3D:
    """True where (r1, r2, r3, s, c) is a valid density matrix."""
    axes, (r1, r2, r3) = _r_mesh(n)
    return Field3D(axes, physical_mask(r1, r2, r3, s, c), float(s), float(c))


def separable_grid(s: float, c: float, n: int = 101) -> Field3D:
    """True where the state is physical and unentangled."""
    axes, (r1, r2, r3) = _r_mesh(n)
    phys = physical_mask(r1, r2, r3, s, c)
    ent = entanglement_values(r1, r2, r3, s, c)
    return Field3D(axes, phys & (ent <= SEPARABLE_TOL), float(s), float(c))


def regions_grid(s: float, c: float, n: int = 101) -> Field3D:
    """Discord region code 1, 2 or 3 at physical nodes, NaN elsewhere."""
    axes, (r1, r2, r3) = _r_mesh(n)
    phys = physical_mask(r1, r2, r3, s, c)
    codes = region_codes(r1, r2, r3, s).astype(float)
    return Field3D(axes, np.where(phys, codes, np.nan), float(s), float(c))


def sc_map(r: CorrelationVector, measure: Measure, n: int = 201) -> Field2D:
    """One measure over the (s, c) plane at fixed correlations ``r``."""
    if not isinstance(r, CorrelationVector):
        r = CorrelationVector(*r)
    if measure not in ("E", "D", "C"):
        raise ValueError(f"measure must be E, D or C, got {measure!r}")
    ax = _axis(n)
    s, c = np.meshgrid(ax, ax, indexing="ij")
    r1, r2, r3 = (np.full_like(s, v) for v in r)
    if measure == "E":
        vals = entanglement_values(r1, r2, r3, s, c)
    elif measure == "D":
        vals = discord_values(r1, r2, r3, s)
    else:
        vals = coherence_values(r1, r2)
    phys = physical_mask(r1, r2, r3, s, c)
    return Field2D((ax, ax.copy()), np.where(phys, vals, np.nan), r)
