"""Parameter-space and matrix-space representations of two-qubit X states.

An X state is written as

    rho = 1/4 (I + s Z⊗I + c I⊗Z + r1 X⊗X + r2 Y⊗Y + r3 Z⊗Z)

so only the main diagonal and the anti-diagonal of the 4x4 matrix are
populated.  Bell-diagonal states are the subfamily with s = c = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

#: Slack used when deciding membership of boundary states.
BOUNDARY_TOL = 1e-12

Family = Literal["bell_diagonal", "x_state"]


class DomainError(ValueError):
    """A parameter or state lies outside the domain of an operation."""


class ShapeError(ValueError):
    """A matrix does not have the X shape required by the operation."""


class UnsupportedStateError(ValueError):
    """An X-shaped matrix with complex anti-diagonal entries."""


def _check_unit_interval(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or abs(value) > 1.0:
        raise DomainError(f"{name}={value!r} is outside [-1, 1]")
    return value


@dataclass(frozen=True)
class CorrelationVector:
    """Diagonal correlations r_i = Tr(rho sigma_i ⊗ sigma_i)."""

    r1: float
    r2: float
    r3: float

    def __post_init__(self) -> None:
        for name in ("r1", "r2", "r3"):
            object.__setattr__(self, name, _check_unit_interval(name, getattr(self, name)))

    def __iter__(self) -> Iterator[float]:
        return iter((self.r1, self.r2, self.r3))


@dataclass(frozen=True)
class XStateParams:
    """Five-parameter description (r1, r2, r3, s, c) of an X state."""

    r: CorrelationVector
    s: float = 0.0
    c: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.r, CorrelationVector):
            object.__setattr__(self, "r", CorrelationVector(*self.r))
        object.__setattr__(self, "s", _check_unit_interval("s", self.s))
        object.__setattr__(self, "c", _check_unit_interval("c", self.c))

    @classmethod
    def of(cls, r1: float, r2: float, r3: float, s: float = 0.0, c: float = 0.0) -> XStateParams:
        return cls(CorrelationVector(r1, r2, r3), s, c)

    @property
    def r1(self) -> float:
        return self.r.r1

    @property
    def r2(self) -> float:
        return self.r.r2

    @property
    def r3(self) -> float:
        return self.r.r3

    def is_bell_diagonal(self) -> bool:
        return self.s == 0.0 and self.c == 0.0

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.r1, self.r2, self.r3, self.s, self.c)


@dataclass(frozen=True)
class PhysicalityReport:
    """Outcome of the positivity test.

    ``margin1``/``margin2`` are the slacks of the two existence inequalities
    (``-inf`` when the square-root argument is negative); ``min_eigenvalue``
    comes from the two 2x2 blocks of the constructed matrix.
    """

    physical: bool
    margin1: float
    margin2: float
    min_eigenvalue: float


def bd_from_r(r: CorrelationVector) -> np.ndarray:
    """Density matrix of the Bell-diagonal state with correlation vector ``r``."""
    if not isinstance(r, CorrelationVector):
        r = CorrelationVector(*r)
    return x_from_params(XStateParams(r))


def x_from_params(xp: XStateParams) -> np.ndarray:
    """Real symmetric X-shaped density matrix for ``xp``."""
    r1, r2, r3, s, c = xp.as_tuple()
    rho = np.zeros((4, 4))
    rho[0, 0] = (1 + r3 + s + c) / 4
    rho[1, 1] = (1 - r3 + s - c) / 4
    rho[2, 2] = (1 - r3 - s + c) / 4
    rho[3, 3] = (1 + r3 - s - c) / 4
    rho[0, 3] = rho[3, 0] = (r1 - r2) / 4
    rho[1, 2] = rho[2, 1] = (r1 + r2) / 4
    return rho


_X_MASK = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))


def check_x_shape(rho: np.ndarray, tol: float = BOUNDARY_TOL) -> np.ndarray:
    """Return ``rho`` as a 4x4 array, raising if it is not a Hermitian X matrix."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ShapeError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho[~_X_MASK]), initial=0.0) > tol:
        raise ShapeError("matrix has entries outside the diagonal and anti-diagonal")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ShapeError("matrix is not Hermitian")
    return rho


def params_from_density(rho: np.ndarray) -> XStateParams:
    """Invert :func:`x_from_params`."""
    rho = check_x_shape(rho)
    if abs(np.trace(rho) - 1) > BOUNDARY_TOL:
        raise DomainError(f"trace is {np.trace(rho)!r}, expected 1")
    anti = np.array([rho[0, 3], rho[1, 2]])
    if np.max(np.abs(anti.imag)) > BOUNDARY_TOL:
        raise UnsupportedStateError("complex anti-diagonal entries are not supported")
    d = np.real(np.diag(rho))
    a14, a23 = anti.real
    return XStateParams.of(
        r1=2 * (a14 + a23),
        r2=2 * (a23 - a14),
        r3=d[0] - d[1] - d[2] + d[3],
        s=d[0] + d[1] - d[2] - d[3],
        c=d[0] - d[1] + d[2] - d[3],
    )


def x_block_eigenvalues(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of an X-shaped Hermitian matrix, ascending.

    The matrix splits into the blocks {1,4} and {2,3}; each 2x2 Hermitian
    block [[a, b], [b*, d]] has eigenvalues (a+d)/2 ± sqrt(((a-d)/2)^2 + |b|^2).
    """
    rho = np.asarray(rho)
    out = []
    for i, j in ((0, 3), (1, 2)):
        a, d = rho[i, i].real, rho[j, j].real
        half_gap = math.hypot((a - d) / 2, abs(rho[i, j]))
        mid = (a + d) / 2
        out += [mid - half_gap, mid + half_gap]
    return np.sort(np.array(out))


def existence_margins(r1, r2, r3, s, c):
    """Slack of the two existence inequalities; ``-inf`` if a root argument is negative.

    Broadcasts over numpy arrays.
    """
    r1, r2, r3, s, c = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (r1, r2, r3, s, c)))
    arg1 = (1 + r3) ** 2 - (s + c) ** 2
    arg2 = (1 - r3) ** 2 - (s - c) ** 2
    with np.errstate(invalid="ignore"):
        m1 = np.where(arg1 >= 0, np.sqrt(np.maximum(arg1, 0.0)) - np.abs(r1 - r2), -np.inf)
        m2 = np.where(arg2 >= 0, np.sqrt(np.maximum(arg2, 0.0)) - np.abs(r1 + r2), -np.inf)
    return m1, m2


def min_eigenvalue(r1, r2, r3, s, c):
    """Smallest eigenvalue of the X matrix, from its closed-form block spectrum."""
    r1, r2, r3, s, c = (np.asarray(v, dtype=float) for v in (r1, r2, r3, s, c))
    lo14 = (1 + r3) - np.hypot(s + c, r1 - r2)
    lo23 = (1 - r3) - np.hypot(s - c, r1 + r2)
    return np.minimum(lo14, lo23) / 4


def physical_mask(r1, r2, r3, s, c, tol: float = BOUNDARY_TOL):
    """Vectorised positivity test (boundary states count as physical)."""
    return min_eigenvalue(r1, r2, r3, s, c) >= -tol


def is_physical(xp: XStateParams) -> PhysicalityReport:
    m1, m2 = existence_margins(*xp.as_tuple())
    lam = float(x_block_eigenvalues(x_from_params(xp))[0])
    return PhysicalityReport(
        physical=lam >= -BOUNDARY_TOL,
        margin1=float(m1),
        margin2=float(m2),
        min_eigenvalue=lam,
    )


def require_physical(xp: XStateParams) -> None:
    """Raise :class:`DomainError` unless ``xp`` describes a positive matrix."""
    if float(min_eigenvalue(*xp.as_tuple())) < -BOUNDARY_TOL:
        raise DomainError(f"unphysical state {xp.as_tuple()}")


def sample_physical_states(
    rng: np.random.Generator, count: int, family: Family = "x_state"
) -> list[XStateParams]:
    """Draw ``count`` physical states uniformly from the existence region.

    Rejection sampling from the bounding box [-1, 1]^3 (Bell-diagonal) or
    [-1, 1]^5 (X states).
    """
    if family not in ("bell_diagonal", "x_state"):
        raise ValueError(f"unknown family {family!r}")
    dim = 3 if family == "bell_diagonal" else 5
    found: list[np.ndarray] = []
    n_found = 0
    while n_found < count:
        batch = rng.uniform(-1.0, 1.0, size=(max(64, 8 * (count - n_found)), dim))
        if dim == 3:
            batch = np.hstack([batch, np.zeros((len(batch), 2))])
        keep = batch[physical_mask(*batch.T, tol=0.0)]
        found.append(keep)
        n_found += len(keep)
    rows = np.vstack(found)[:count]
    return [XStateParams.of(*row) for row in rows]


def random_physical_state(seed: int, family: Family = "x_state") -> XStateParams:
    """Deterministic random physical state for ``seed``."""
    return sample_physical_states(np.random.default_rng(seed), 1, family)[0]
