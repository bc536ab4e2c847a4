"""Seeded verification suites comparing closed forms with matrix-level oracles."""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from .channels import Channel, ChannelSpec, calibrate, completeness_error, evolve_params, kraus_evolve_pair, kraus_single
from .measures import discord_values, entanglement_values
from .oracle import cc_discord_grid, l1_coherence_matrix, wootters_concurrence
from .relations import CheckRow, VerificationReport, verify_relations
from .state import (
    BOUNDARY_TOL,
    XStateParams,
    existence_margins,
    sample_physical_states,
    x_block_eigenvalues,
    x_from_params,
)

#: Start states and channels of the worked examples, plus one Bit Flip X state
#: that reaches Region 3 while coherence still varies.
WORKED_CASES: tuple[tuple[tuple[float, ...], Channel], ...] = (
    ((-0.3, 0.6, 0.4, 0.0, 0.0), Channel.BIT_FLIP),
    ((-0.7, 0.5, 0.3, 0.0, 0.0), Channel.PHASE_DAMPING),
    ((-0.7, 0.5, 0.3, 0.0, 0.0), Channel.DEPOLARIZING),
    ((-0.6, 0.4, 0.3, 0.2, 0.3), Channel.PHASE_DAMPING),
    ((0.5, -0.2, 0.3, 0.2, 0.3), Channel.PHASE_DAMPING),
    ((-0.6, 0.4, 0.7, 0.2, 0.3), Channel.PHASE_DAMPING),
    ((-0.6, 0.4, 0.3, 0.2, 0.3), Channel.DEPOLARIZING),
    ((-0.3, 0.6, 0.4, 0.2, 0.1), Channel.BIT_FLIP),
)

P_GRID = np.round(np.linspace(0.0, 1.0, 11), 12)


def _row(name: str, samples: int, dev: float, tol: float, note: str = "") -> CheckRow:
    return CheckRow(name, samples, float(dev), tol, "pass" if dev <= tol else "fail", note)


def check_oracles(seed: int = 7, count: int = 10_000, grid_count: int = 100, grid_m: int = 2001) -> VerificationReport:
    """Closed-form measures against matrix-level reference values."""
    rng = np.random.default_rng(seed)
    xs = sample_physical_states(rng, count, "x_state")
    arr = np.array([xp.as_tuple() for xp in xs])
    closed_e = entanglement_values(*arr.T)
    closed_c = np.maximum(np.abs(arr[:, 0]), np.abs(arr[:, 1]))
    dev_e = dev_c = 0.0
    for xp, e, c in zip(xs, closed_e, closed_c):
        rho = x_from_params(xp)
        dev_e = max(dev_e, abs(wootters_concurrence(rho) - e))
        dev_c = max(dev_c, abs(l1_coherence_matrix(rho) - c))

    bds = np.array([xp.as_tuple() for xp in sample_physical_states(rng, count, "bell_diagonal")])
    mid = np.median(np.abs(bds[:, :3]), axis=1)
    dev_bd = float(np.max(np.abs(discord_values(bds[:, 0], bds[:, 1], bds[:, 2], bds[:, 3]) - mid / 2)))
    dev_grid = max(abs(cc_discord_grid(row[:3], grid_m) - m / 2) for row, m in zip(bds[:grid_count], mid))

    box = rng.uniform(-1.0, 1.0, size=(count, 5))
    m1, m2 = existence_margins(*box.T)
    by_margin = (m1 >= 0) & (m2 >= 0)
    lam = np.array([x_block_eigenvalues(x_from_params(XStateParams.of(*row)))[0] for row in box])
    by_eigen = lam >= -BOUNDARY_TOL
    disagree = int(np.sum((by_margin != by_eigen) & (np.abs(lam) >= 1e-10)))

    return VerificationReport((
        _row("oracles:concurrence", count, dev_e, 1e-9),
        _row("oracles:l1 coherence", count, dev_c, 1e-12),
        _row("oracles:discord bell reduction", count, dev_bd, 1e-12),
        _row("oracles:discord grid", min(grid_count, count), dev_grid, 2e-3, f"m={grid_m}"),
        _row("oracles:physicality routes", count, disagree, 0, "disagreements away from the boundary"),
    ))


def check_channels(seed: int = 7, count: int = 100) -> VerificationReport:
    """Closed-form parameter maps against calibrated Kraus evolution."""
    rng = np.random.default_rng(seed)
    xs = sample_physical_states(rng, count, "x_state")
    rows = []
    for kind in Channel:
        dev = worst_eig = 0.0
        for p in P_GRID:
            q = calibrate(kind, float(p))
            for xp in xs:
                evolved = x_from_params(evolve_params(xp, ChannelSpec(kind, float(p))))
                kraus = kraus_evolve_pair(x_from_params(xp), kind, q)
                dev = max(dev, float(np.max(np.abs(evolved - kraus))))
                worst_eig = max(worst_eig, -float(x_block_eigenvalues(evolved)[0]))
        n = len(P_GRID) * count
        complete = max(completeness_error(kraus_single(kind, q)) for q in np.linspace(0, 1, 101))
        rows += [
            _row(f"channels:{kind.value} kraus vs closed form", n, dev, 1e-12),
            _row(f"channels:{kind.value} evolved physical", n, max(worst_eig, 0.0), BOUNDARY_TOL,
                 "largest negative eigenvalue"),
            _row(f"channels:{kind.value} kraus completeness", 101, complete, 1e-12),
        ]
    return VerificationReport(tuple(rows))


def _label(values: tuple[float, ...]) -> str:
    return "(" + ",".join(f"{v:g}" for v in values) + ")"


def check_relations(
    cases=WORKED_CASES, n_points: int = 1000, tol: float = 1e-12
) -> VerificationReport:
    """Relation curves and published relations for each (state, channel) case."""
    rows: list[CheckRow] = []
    for values, kind in cases:
        xp = XStateParams.of(*values)
        report = verify_relations(xp, kind, n_points, tol)
        rows += [replace(r, name=f"relations{_label(xp.as_tuple())}:{r.name}") for r in report.rows]
    return VerificationReport(tuple(rows))


def run_all(seed: int = 7, count: int = 10_000, channel_count: int = 100) -> VerificationReport:
    return check_oracles(seed, count) + check_channels(seed, channel_count) + check_relations()
