"""Matrix-level reference values that do not use the closed forms.

These routines work on density matrices only, so agreement with
:mod:`xstates.measures` is a genuine cross-check.
"""

from __future__ import annotations

import numpy as np

from .state import (
    BOUNDARY_TOL,
    CorrelationVector,
    DomainError,
    XStateParams,
    bd_from_r,
    require_physical,
    x_block_eigenvalues,
)

_SY = np.array([[0, -1j], [1j, 0]])
_YY = np.kron(_SY, _SY).real  # sigma_y ⊗ sigma_y is real


def _x_shaped(h: np.ndarray) -> bool:
    mask = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))
    return not np.any(h[~mask])


def spectrum(h: np.ndarray) -> np.ndarray:
    """Eigenvalues of a 4x4 Hermitian matrix in descending order."""
    h = np.asarray(h)
    if _x_shaped(h):
        return x_block_eigenvalues(h)[::-1]
    return np.linalg.eigvalsh(h)[::-1]


def trace_norm_herm(h: np.ndarray) -> float:
    """Sum of |eigenvalues| of a Hermitian matrix."""
    h = np.asarray(h)
    if h.shape[0] != h.shape[1]:
        raise DomainError(f"matrix of shape {h.shape} is not square")
    if np.max(np.abs(h - h.conj().T), initial=0.0) > BOUNDARY_TOL:
        raise DomainError("matrix is not Hermitian")
    if h.shape == (4, 4):
        return float(np.sum(np.abs(spectrum(h))))
    return float(np.sum(np.abs(np.linalg.eigvalsh(h))))


def wootters_concurrence(rho: np.ndarray) -> float:
    """Concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the square roots of the eigenvalues of
    rho (Y⊗Y) rho* (Y⊗Y).  With rho = W W^† they are the singular values
    of W^T (Y⊗Y) W, so no square root of a possibly tiny non-Hermitian
    eigenvalue is taken.
    """
    rho = np.asarray(rho, dtype=complex)
    evals, vecs = np.linalg.eigh(rho)
    if evals[0] < -BOUNDARY_TOL or abs(np.sum(evals) - 1) > 1e-10:
        raise DomainError("matrix is not a density matrix")
    w = vecs * np.sqrt(np.clip(evals, 0.0, None))
    lam = np.linalg.svd(w.T @ _YY @ w, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def l1_coherence_matrix(rho: np.ndarray) -> float:
    """Sum of the absolute values of the off-diagonal entries."""
    rho = np.asarray(rho)
    return float(np.sum(np.abs(rho)) - np.sum(np.abs(np.diag(rho))))


def cc_discord_grid(r: CorrelationVector, m: int = 2001) -> float:
    """Half the smallest trace distance from a Bell-diagonal state to an axis state.

    The axis states t·e_i (t on an m-point grid over [-1, 1]) are the
    zero-discord Bell-diagonal states.  Each distance is the block-spectrum
    trace norm of the difference matrix, batched over the grid.
    """
    if not isinstance(r, CorrelationVector):
        r = CorrelationVector(*r)
    if m < 11:
        raise ValueError("need at least 11 grid points per axis")
    require_physical(XStateParams(r))
    rho = bd_from_r(r)
    ts = np.linspace(-1.0, 1.0, m)
    best = np.inf
    for axis in range(3):
        diffs = np.empty((m, 4, 4))
        for k, t in enumerate(ts):
            e = [0.0, 0.0, 0.0]
            e[axis] = t
            diffs[k] = rho - bd_from_r(CorrelationVector(*e))
        best = min(best, float(np.min(_x_trace_norms(diffs))))
    return 0.5 * best


def _x_trace_norms(stack: np.ndarray) -> np.ndarray:
    """Trace norms of a stack of real symmetric X-shaped matrices."""
    total = np.zeros(len(stack))
    for i, j in ((0, 3), (1, 2)):
        a, d, b = stack[:, i, i], stack[:, j, j], stack[:, i, j]
        mid, half_gap = (a + d) / 2, np.hypot((a - d) / 2, b)
        total += np.abs(mid - half_gap) + np.abs(mid + half_gap)
    return total
