"""Path sums over interleaved left/right step words.

The amplitude operator after ``l`` left steps and ``m`` right steps is the sum
of all ``C(l+m, l)`` ordered products of P's and Q's (leftmost letter acts
last).  This module computes that operator three ways: brute-force enumeration
(the oracle), the explicit coefficient sums in the letter basis, and the
single-sum closed form over the cluster count ``gamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coin import BRANCH_GENERIC, Coin, Letter, letter_matrix
from .errors import CapExceededError, DegenerateCoinError, ParityViolationError

__all__ = [
    "StepCount",
    "PqrsMatrix",
    "ENUMERATION_CAP",
    "cluster_count",
    "path_sum_exhaustive",
    "path_sum_coefficients",
    "closed_form_coefficients",
    "path_sum",
]

#: Largest l+m the brute-force oracle will enumerate (C(14,7) = 3432 words).
ENUMERATION_CAP = 14


@dataclass(frozen=True)
class StepCount:
    """Left/right step counts ``(l, m)`` with derived time ``n`` and position ``k``."""

    l: int
    m: int

    def __post_init__(self) -> None:
        if self.l < 0 or self.m < 0:
            raise ValueError(f"step counts must be non-negative, got ({self.l}, {self.m})")

    @property
    def n(self) -> int:
        return self.l + self.m

    @property
    def k(self) -> int:
        return self.m - self.l

    @classmethod
    def from_time_position(cls, n: int, k: int) -> "StepCount":
        """Invert ``n = l + m``, ``k = m - l``; requires ``n + k`` even and ``|k| <= n``."""
        if abs(k) > n or (n + k) % 2 != 0:
            raise ParityViolationError(f"position {k} unreachable at time {n}")
        return cls(l=(n - k) // 2, m=(n + k) // 2)


@dataclass(frozen=True)
class PqrsMatrix:
    """A 2x2 matrix stored as coordinates in the four-letter basis of a coin."""

    p: complex
    q: complex
    r: complex
    s: complex
    coin: Coin

    def materialize(self) -> np.ndarray:
        out = self.p * letter_matrix(self.coin, Letter.P)
        out += self.q * letter_matrix(self.coin, Letter.Q)
        out += self.r * letter_matrix(self.coin, Letter.R)
        out += self.s * letter_matrix(self.coin, Letter.S)
        return out


def cluster_count(gamma: int, l: int, m: int) -> int:
    """Number of words ``P^{w1} Q^{w2} ... P^{w_{2*gamma+1}}`` that start and
    end with a P block, have ``2*gamma + 1`` blocks, and use ``l`` P's, ``m`` Q's.

    Equals ``C(l-1, gamma) * C(m-1, gamma-1)``; zero whenever either binomial
    is out of range.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if l < 1 or m < 1 or gamma > l - 1 or gamma - 1 > m - 1:
        return 0
    return math.comb(l - 1, gamma) * math.comb(m - 1, gamma - 1)


def _mat2_mul(x, y):
    # 2x2 product on nested tuples; far cheaper than numpy at this size.
    (x00, x01), (x10, x11) = x
    (y00, y01), (y10, y11) = y
    return (
        (x00 * y00 + x01 * y10, x00 * y01 + x01 * y11),
        (x10 * y00 + x11 * y10, x10 * y01 + x11 * y11),
    )


def path_sum_exhaustive(coin: Coin, sc: StepCount, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Sum of all ordered products of ``sc.l`` P's and ``sc.m`` Q's (oracle).

    Exponential in ``l + m``; refuses beyond ``cap``.
    """
    if sc.n > cap:
        raise CapExceededError(f"enumeration capped at l+m = {cap}, got {sc.n}")
    p = tuple(map(tuple, letter_matrix(coin, Letter.P)))
    q = tuple(map(tuple, letter_matrix(coin, Letter.Q)))
    zero = complex(0.0)
    total = [[zero, zero], [zero, zero]]
    identity = ((complex(1.0), zero), (zero, complex(1.0)))

    def walk(prefix, l_rem: int, m_rem: int) -> None:
        if l_rem == 0 and m_rem == 0:
            total[0][0] += prefix[0][0]
            total[0][1] += prefix[0][1]
            total[1][0] += prefix[1][0]
            total[1][1] += prefix[1][1]
            return
        if l_rem:
            walk(_mat2_mul(prefix, p), l_rem - 1, m_rem)
        if m_rem:
            walk(_mat2_mul(prefix, q), l_rem, m_rem - 1)

    walk(identity, sc.l, sc.m)
    return np.array(total, dtype=np.complex128)


def _require_generic(coin: Coin) -> None:
    if coin.branch != BRANCH_GENERIC:
        raise DegenerateCoinError(
            f"mixed path sums need abcd != 0, coin branch is {coin.branch!r}"
        )


def path_sum_coefficients(coin: Coin, sc: StepCount) -> PqrsMatrix:
    """Letter-basis coordinates of the path sum via the explicit binomial sums.

    Branches: pure-left words give ``p = a^(l-1)`` only, pure-right words give
    ``q = d^(m-1)`` only; mixed words need all coin entries nonzero.
    """
    l, m = sc.l, sc.m
    if sc.n < 1:
        raise ValueError("path sums are defined for l + m >= 1")
    a, b, c, d = coin.a, coin.b, coin.c, coin.d
    zero = complex(0.0)
    if m == 0:
        return PqrsMatrix(p=a ** (l - 1), q=zero, r=zero, s=zero, coin=coin)
    if l == 0:
        return PqrsMatrix(p=zero, q=d ** (m - 1), r=zero, s=zero, coin=coin)
    _require_generic(coin)

    p_sum = sum(
        math.comb(l - 1, g) * math.comb(m - 1, g - 1)
        * a ** (l - g - 1) * b**g * c**g * d ** (m - g)
        for g in range(1, min(l - 1, m) + 1)
    )
    q_sum = sum(
        math.comb(l - 1, g - 1) * math.comb(m - 1, g)
        * a ** (l - g) * b**g * c**g * d ** (m - g - 1)
        for g in range(1, min(l, m - 1) + 1)
    )
    r_sum = sum(
        math.comb(l - 1, g - 1) * math.comb(m - 1, g - 1)
        * a ** (l - g) * b**g * c ** (g - 1) * d ** (m - g)
        for g in range(1, min(l, m) + 1)
    )
    s_sum = sum(
        math.comb(l - 1, g - 1) * math.comb(m - 1, g - 1)
        * a ** (l - g) * b ** (g - 1) * c**g * d ** (m - g)
        for g in range(1, min(l, m) + 1)
    )
    return PqrsMatrix(
        p=complex(p_sum), q=complex(q_sum), r=complex(r_sum), s=complex(s_sum), coin=coin
    )


def closed_form_coefficients(coin: Coin, sc: StepCount) -> PqrsMatrix:
    """Letter-basis coordinates via the single sum over the cluster count.

    For mixed words the coordinates are ``a^l conj(a)^m det^m`` times an
    alternating sum in ``(-|b|^2/|a|^2)^gamma``; the real alternating parts are
    accumulated with exact binomials and compensated summation.
    """
    l, m = sc.l, sc.m
    if sc.n < 1:
        raise ValueError("path sums are defined for l + m >= 1")
    a, b = coin.a, coin.b
    det = coin.delta
    zero = complex(0.0)
    if m == 0:
        return PqrsMatrix(p=a ** (l - 1), q=zero, r=zero, s=zero, coin=coin)
    if l == 0:
        return PqrsMatrix(p=zero, q=(det * a.conjugate()) ** (m - 1), r=zero, s=zero, coin=coin)
    _require_generic(coin)

    ratio = -(abs(b) ** 2) / (abs(a) ** 2)
    weights = []
    p_parts = []
    q_parts = []
    term = 1.0
    for g in range(1, min(l, m) + 1):
        term *= ratio
        w = term * math.comb(l - 1, g - 1) * math.comb(m - 1, g - 1)
        weights.append(w)
        p_parts.append(w * (l - g) / g)
        q_parts.append(w * (m - g) / g)
    w_total = math.fsum(weights)
    prefactor = a**l * a.conjugate() ** m * det**m
    return PqrsMatrix(
        p=prefactor * math.fsum(p_parts) / a,
        q=prefactor * math.fsum(q_parts) / (det * a.conjugate()),
        r=prefactor * w_total * (-1.0 / (det * b.conjugate())),
        s=prefactor * w_total / b,
        coin=coin,
    )


def path_sum(coin: Coin, sc: StepCount) -> np.ndarray:
    """The path-sum operator as a 2x2 matrix, via the closed form."""
    return closed_form_coefficients(coin, sc).materialize()
