"""Exact time evolution of the amplitude field.

The field at time ``n`` lives on positions ``k in {-n, -n+2, ..., n}`` (only
the parity class reachable in ``n`` steps is stored) and evolves by the banded
recurrence ``psi_k' = Q psi_{k-1} + P psi_{k+1}``.  No renormalization is ever
applied: the drift of the total probability from 1 is the primary numerical
health signal and is reported, not corrected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coin import Coin, Letter, Qubit, letter_matrix
from .errors import CapExceededError

__all__ = [
    "AmplitudeField",
    "Distribution",
    "DENSE_CAP",
    "initial_field",
    "step",
    "evolve",
    "distribution",
    "dense_step_matrix",
    "dense_unitary_check",
]

#: Largest half-width N for the dense ring-evolution matrix (size 4N+2).
DENSE_CAP = 64


@dataclass(frozen=True)
class AmplitudeField:
    """Two-component amplitudes over the reachable positions at time ``n``.

    ``amps[j]`` is the (left, right) amplitude pair at position ``k = -n + 2j``.
    """

    n: int
    amps: np.ndarray

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1, 2)

    def amplitude(self, k: int) -> np.ndarray:
        """Amplitude pair at position ``k`` (zero off the reachable parity class)."""
        if abs(k) > self.n or (k + self.n) % 2 != 0:
            return np.zeros(2, dtype=np.complex128)
        return self.amps[(k + self.n) // 2]

    def total_probability(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def to_distribution(self) -> "Distribution":
        return Distribution(n=self.n, probs=np.sum(np.abs(self.amps) ** 2, axis=1))


@dataclass(frozen=True)
class Distribution:
    """Position probabilities at time ``n``, aligned with ``positions``."""

    n: int
    probs: np.ndarray

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1, 2)

    def probability(self, k: int) -> float:
        if abs(k) > self.n or (k + self.n) % 2 != 0:
            return 0.0
        return float(self.probs[(k + self.n) // 2])

    def total(self) -> float:
        return float(np.sum(self.probs))

    def as_dict(self) -> dict[int, float]:
        return {int(k): float(p) for k, p in zip(self.positions, self.probs)}

    def mean(self) -> float:
        return float(np.dot(self.positions, self.probs))

    def moment(self, m: int) -> float:
        return float(np.dot(np.asarray(self.positions, dtype=float) ** m, self.probs))


def initial_field(qubit: Qubit) -> AmplitudeField:
    """Field at time 0: the qubit at the origin, nothing anywhere else."""
    return AmplitudeField(n=0, amps=qubit.vector.reshape(1, 2))


def step(coin: Coin, field: AmplitudeField) -> AmplitudeField:
    """One time step of the banded recurrence; support grows by one each side."""
    p_t = letter_matrix(coin, Letter.P).T
    q_t = letter_matrix(coin, Letter.Q).T
    old = field.amps
    new = np.zeros((field.n + 2, 2), dtype=np.complex128)
    new[1:] += old @ q_t  # right moves: contribution of psi_{k-1}
    new[:-1] += old @ p_t  # left moves: contribution of psi_{k+1}
    return AmplitudeField(n=field.n + 1, amps=new)


def evolve(coin: Coin, qubit: Qubit, n: int) -> AmplitudeField:
    """Field after ``n`` steps from ``qubit`` at the origin."""
    if n < 0:
        raise ValueError(f"time must be non-negative, got {n}")
    field = initial_field(qubit)
    for _ in range(n):
        field = step(coin, field)
    return field


def distribution(coin: Coin, qubit: Qubit, n: int) -> Distribution:
    """Exact position distribution at time ``n`` (squared amplitude norms)."""
    return evolve(coin, qubit, n).to_distribution()


def dense_step_matrix(coin: Coin, half_width: int) -> np.ndarray:
    """The one-step evolution matrix on a ring of ``2*half_width + 1`` cells.

    Cell ``k`` (block index ``k + half_width``) receives ``P`` from cell
    ``k+1`` and ``Q`` from cell ``k-1``, cyclically.  Size ``4N+2`` for
    ``N = half_width``; used as a small-scale unitarity oracle, not for
    production evolution.
    """
    if half_width > DENSE_CAP:
        raise CapExceededError(f"dense matrix capped at half_width = {DENSE_CAP}")
    if half_width < 1:
        raise ValueError("half_width must be >= 1")
    cells = 2 * half_width + 1
    p = letter_matrix(coin, Letter.P)
    q = letter_matrix(coin, Letter.Q)
    out = np.zeros((2 * cells, 2 * cells), dtype=np.complex128)
    for i in range(cells):
        j_p = (i + 1) % cells
        j_q = (i - 1) % cells
        out[2 * i : 2 * i + 2, 2 * j_p : 2 * j_p + 2] = p
        out[2 * i : 2 * i + 2, 2 * j_q : 2 * j_q + 2] = q
    return out


def dense_unitary_check(coin: Coin, half_width: int) -> float:
    """Max-norm deviation of the dense step matrix from unitarity."""
    u = dense_step_matrix(coin, half_width)
    gram = u.conj().T @ u
    return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
