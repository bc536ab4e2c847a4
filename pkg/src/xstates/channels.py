"""Local Bit Flip, Phase Damping and Depolarizing noise on both qubits.

The closed-form parameter maps define the channels.  With eta = 1 - p:

    Bit Flip        (r1, r2 eta^2, r3 eta^2, s eta, c eta)
    Phase Damping   (r1 eta^2, r2 eta^2, r3, s, c)
    Depolarizing    (r1 eta^2, r2 eta^2, r3 eta^2, s eta, c eta)

The Kraus backend applies a single-qubit channel of strength q to each
qubit.  :func:`calibrate` converts p into the q for which the two routes
agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .state import DomainError, XStateParams

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class Channel(str, Enum):
    BIT_FLIP = "bf"
    PHASE_DAMPING = "pd"
    DEPOLARIZING = "dep"

    @classmethod
    def parse(cls, name: str | Channel) -> Channel:
        if isinstance(name, Channel):
            return name
        key = name.strip().lower().replace("_", "").replace("-", "").replace(" ", "")
        aliases = {
            "bf": cls.BIT_FLIP, "bitflip": cls.BIT_FLIP,
            "pd": cls.PHASE_DAMPING, "phasedamping": cls.PHASE_DAMPING,
            "dep": cls.DEPOLARIZING, "depolarizing": cls.DEPOLARIZING,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown channel {name!r}; expected one of bf, pd, dep") from None


def _check_strength(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name}={value!r} is outside [0, 1]")
    return value


@dataclass(frozen=True)
class ChannelSpec:
    kind: Channel
    p: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Channel.parse(self.kind))
        object.__setattr__(self, "p", _check_strength("p", self.p))


def evolve_params(xp: XStateParams, ch: ChannelSpec) -> XStateParams:
    """Apply the channel ``ch`` to both qubits of ``xp``."""
    eta = 1.0 - ch.p
    eta2 = eta * eta
    r1, r2, r3, s, c = xp.as_tuple()
    if ch.kind is Channel.BIT_FLIP:
        return XStateParams.of(r1, r2 * eta2, r3 * eta2, s * eta, c * eta)
    if ch.kind is Channel.PHASE_DAMPING:
        return XStateParams.of(r1 * eta2, r2 * eta2, r3, s, c)
    return XStateParams.of(r1 * eta2, r2 * eta2, r3 * eta2, s * eta, c * eta)


def kraus_single(kind: Channel | str, q: float) -> list[np.ndarray]:
    """Single-qubit Kraus operators of strength ``q``."""
    kind = Channel.parse(kind)
    q = _check_strength("q", q)
    keep = math.sqrt(1 - q) * _I
    if kind is Channel.BIT_FLIP:
        return [keep, math.sqrt(q) * _X]
    if kind is Channel.PHASE_DAMPING:
        return [keep, math.sqrt(q) * np.diag([1, 0]).astype(complex), math.sqrt(q) * np.diag([0, 1]).astype(complex)]
    w = math.sqrt(q / 3)
    return [keep, w * _X, w * _Y, w * _Z]


def completeness_error(ops: list[np.ndarray]) -> float:
    """max |sum K^† K - I| over entries."""
    total = sum(k.conj().T @ k for k in ops)
    return float(np.max(np.abs(total - np.eye(ops[0].shape[0]))))


def calibrate(kind: Channel | str, p: float) -> float:
    """Kraus strength q reproducing the closed-form map at strength p.

    A single-qubit bit flip of strength q damps Y and Z by (1 - 2q), phase
    damping damps X and Y by (1 - q), and depolarizing damps all three
    Paulis by (1 - 4q/3).  Each is matched to the factor 1 - p.
    """
    kind = Channel.parse(kind)
    p = _check_strength("p", p)
    if kind is Channel.BIT_FLIP:
        return p / 2
    if kind is Channel.PHASE_DAMPING:
        return p
    return 3 * p / 4


def kraus_evolve_pair(rho: np.ndarray, kind: Channel | str, q: float) -> np.ndarray:
    """sum_ij (K_i ⊗ K_j) rho (K_i ⊗ K_j)^†."""
    ops = kraus_single(kind, q)
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for ka in ops:
        for kb in ops:
            k = np.kron(ka, kb)
            out += k @ rho @ k.conj().T
    return out


def scale_factors(kind: Channel | str, p):
    """Multipliers (k1, k2, k3, ks) applied to (r1, r2, r3, s and c) at strength p.

    Broadcasts over an array of strengths.
    """
    kind = Channel.parse(kind)
    eta = 1.0 - np.asarray(p, dtype=float)
    eta2 = eta * eta
    one = np.ones_like(eta)
    if kind is Channel.BIT_FLIP:
        return one, eta2, eta2, eta
    if kind is Channel.PHASE_DAMPING:
        return eta2, eta2, one, one
    return eta2, eta2, eta2, eta


def evolve_arrays(xp: XStateParams, kind: Channel | str, p):
    """Evolved (r1, r2, r3, s, c) as arrays over the strengths ``p``."""
    k1, k2, k3, ks = scale_factors(kind, p)
    r1, r2, r3, s, c = xp.as_tuple()
    return r1 * k1, r2 * k2, r3 * k3, s * ks, c * ks
