"""Closed-form position probabilities, characteristic functions, and moments.

Everything here evaluates explicit finite sums; the walk engine is the
independent oracle.  The interior formulas are alternating double sums over
cluster counts ``(gamma, delta)`` weighted by ``(-|b|^2/|a|^2)^(gamma+delta)``
and a product of four binomials ``kappa``.  At small ``n`` they are evaluated
literally, with exact integer binomials and compensated summation.  The
cancellation in the alternating sums grows like ``(n-2) * log10(1/|a|)``
digits, so past a safe band the same sums are evaluated in arbitrary-precision
arithmetic, factored as products of single sums (an exact algebraic
regrouping: ``kappa`` splits into a gamma part times a delta part, and every
bracket is affine in ``gamma``, ``delta``, and ``gamma*delta``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb, fsum

import mpmath

from .coin import BRANCH_A_ZERO, BRANCH_B_ZERO, BRANCH_GENERIC, Coin, Qubit
from .errors import DegenerateCoinError, ParityViolationError, PreconditionError

__all__ = [
    "WalkParams",
    "kappa_factor",
    "nu_factor",
    "position_probability",
    "characteristic_function",
    "moment",
    "reduced_mean",
]

# Escalate to arbitrary precision once the alternating sums are expected to
# cancel more than this many digits.
_MAX_FLOAT_DIGITS_LOST = 9.0


@dataclass(frozen=True)
class WalkParams:
    """A (coin, qubit) pair with the derived scalar parameters.

    ``cross`` is the real interference term ``a*alpha*conj(b*beta) + conj``;
    ``mu`` is the drift parameter ``(|a|^2-|b|^2)(|alpha|^2-|beta|^2) + 2*cross``.
    """

    coin: Coin
    qubit: Qubit

    @property
    def z_cross(self) -> complex:
        """The half cross term ``a*alpha*conj(b*beta)`` (cross = 2*Re of this)."""
        return self.coin.a * self.qubit.alpha * (self.coin.b * self.qubit.beta).conjugate()

    @property
    def cross(self) -> float:
        return 2.0 * self.z_cross.real

    @property
    def weight_gap(self) -> float:
        """``|alpha|^2 - |beta|^2``."""
        return abs(self.qubit.alpha) ** 2 - abs(self.qubit.beta) ** 2

    @property
    def mu(self) -> float:
        gap_coin = self.coin.abs_a_sq - self.coin.abs_b_sq
        return gap_coin * self.weight_gap + 2.0 * self.cross


def kappa_factor(n: int, k: int, gamma: int, delta: int) -> int:
    """Product of the four binomials weighting the (gamma, delta) term."""
    return (
        comb(k - 1, gamma - 1)
        * comb(k - 1, delta - 1)
        * comb(n - k - 1, gamma - 1)
        * comb(n - k - 1, delta - 1)
    )


def nu_factor(n: int, k: int, gamma: int, delta: int, abs_b_sq: float) -> float:
    """``(n-k)^2 + k^2 - n(gamma+delta) + 2*gamma*delta/|b|^2``."""
    return (n - k) ** 2 + k**2 - n * (gamma + delta) + 2.0 * gamma * delta / abs_b_sq


def _digits_lost(coin: Coin, n: int) -> float:
    return max(0.0, (n - 2) * math.log10(1.0 / abs(coin.a)))


def _working_dps(coin: Coin, n: int) -> int:
    return 36 + int((n - 2) * 2.0 * math.log10(1.0 / abs(coin.a)))


def _pair_sums_mp(n: int, kk: int, neg_r):
    """Single alternating sums T0 = sum w_g, T1 = sum w_g/g over g = 1..kk,
    with w_g = (-r)^g C(kk-1, g-1) C(n-kk-1, g-1), in mpmath arithmetic."""
    t0 = mpmath.mpf(0)
    t1 = mpmath.mpf(0)
    power = mpmath.mpf(1)
    for g in range(1, kk + 1):
        power = power * neg_r
        w = power * (comb(kk - 1, g - 1) * comb(n - kk - 1, g - 1))
        t0 += w
        t1 += w / g
    return t0, t1


@lru_cache(maxsize=512)
def _cf_tables(params: WalkParams, n: int):
    """Scaled per-position coefficient tables for the generic branch.

    Returns ``(cos0, sin0, rows, middle)`` with rows of
    ``(pos, cos_coef, sin_coef)`` for positions ``pos = n - 2*kk > 0``:

    - characteristic value  = cos0*cos(n xi) - i*sin0*sin(n xi)
        + sum(cos_coef*cos(pos xi) - i*pos*sin_coef*sin(pos xi)) + middle
    - even moment = cos0*n^m + sum(pos^m * cos_coef)
    - odd moment  = -(sin0*n^m + sum(pos^(m+1) * sin_coef))

    ``middle`` is the position-0 block present only at even ``n``; it is
    evaluated by its own code path (:func:`_even_middle_term`).
    """
    coin, qubit = params.coin, params.qubit
    a2, b2 = coin.abs_a_sq, coin.abs_b_sq
    mu, gap = params.mu, params.weight_gap
    scale = a2 ** (n - 1)
    rows = []
    if _digits_lost(coin, n) <= _MAX_FLOAT_DIGITS_LOST:
        r = b2 / a2
        for kk in range(1, (n - 1) // 2 + 1):
            n_parts, g_parts = [], []
            for g in range(1, kk + 1):
                cg = comb(kk - 1, g - 1) * comb(n - kk - 1, g - 1)
                for d in range(1, kk + 1):
                    cd = comb(kk - 1, d - 1) * comb(n - kk - 1, d - 1)
                    w = (-r) ** (g + d) * cg * cd / (g * d)
                    n_parts.append(w * nu_factor(n, kk, g, d, b2))
                    g_parts.append(w * (mu * n + (g + d) * (gap - mu) / (2.0 * b2)))
            rows.append((n - 2 * kk, scale * fsum(n_parts), scale * fsum(g_parts)))
    else:
        with mpmath.workdps(_working_dps(coin, n)):
            neg_r = -mpmath.mpf(b2) / mpmath.mpf(a2)
            mp_scale = mpmath.mpf(a2) ** (n - 1)
            mu_mp, gap_mp, b2_mp = mpmath.mpf(mu), mpmath.mpf(gap), mpmath.mpf(b2)
            for kk in range(1, (n - 1) // 2 + 1):
                t0, t1 = _pair_sums_mp(n, kk, neg_r)
                n_sum = ((n - kk) ** 2 + kk**2) * t1**2 - 2 * n * t0 * t1 + 2 * t0**2 / b2_mp
                g_sum = mu_mp * n * t1**2 + (gap_mp - mu_mp) / b2_mp * t0 * t1
                rows.append((n - 2 * kk, float(mp_scale * n_sum), float(mp_scale * g_sum)))
    middle = _even_middle_term(params, n) if n % 2 == 0 else 0.0
    return scale, scale * mu, tuple(rows), middle


def _even_middle_term(params: WalkParams, n: int) -> float:
    """The position-0 block of the even-time characteristic function.

    Equals ``P(X_n = 0)`` for any initial state: the state-dependent terms
    cancel at the central position.
    """
    coin = params.coin
    a2, b2 = coin.abs_a_sq, coin.abs_b_sq
    kk = n // 2
    scale = a2 ** (n - 1)
    if _digits_lost(coin, n) <= _MAX_FLOAT_DIGITS_LOST:
        r = b2 / a2
        parts = []
        for g in range(1, kk + 1):
            cg = comb(kk - 1, g - 1) * comb(n - kk - 1, g - 1)
            for d in range(1, kk + 1):
                cd = comb(kk - 1, d - 1) * comb(n - kk - 1, d - 1)
                w = (-r) ** (g + d) * cg * cd / (2.0 * g * d)
                parts.append(w * nu_factor(n, kk, g, d, b2))
        return scale * fsum(parts)
    with mpmath.workdps(_working_dps(coin, n)):
        neg_r = -mpmath.mpf(b2) / mpmath.mpf(a2)
        t0, t1 = _pair_sums_mp(n, kk, neg_r)
        n_sum = ((n - kk) ** 2 + kk**2) * t1**2 - 2 * n * t0 * t1 + 2 * t0**2 / mpmath.mpf(b2)
        return float(mpmath.mpf(a2) ** (n - 1) * n_sum / 2)


def _require_generic(coin: Coin) -> None:
    if coin.branch != BRANCH_GENERIC:
        raise DegenerateCoinError(
            f"closed form needs abcd != 0, coin branch is {coin.branch!r}"
        )


def _interior_probability(params: WalkParams, n: int, kk: int, positive_side: bool) -> float:
    coin, qubit = params.coin, params.qubit
    a2, b2 = coin.abs_a_sq, coin.abs_b_sq
    wa, wb = abs(qubit.alpha) ** 2, abs(qubit.beta) ** 2
    z = params.z_cross
    if _digits_lost(coin, n) <= _MAX_FLOAT_DIGITS_LOST:
        r = b2 / a2
        re_parts, im_parts = [], []
        for g in range(1, kk + 1):
            cg = comb(kk - 1, g - 1) * comb(n - kk - 1, g - 1)
            for d in range(1, kk + 1):
                cd = comb(kk - 1, d - 1) * comb(n - kk - 1, d - 1)
                w = (-r) ** (g + d) * cg * cd / (g * d)
                coef_far = kk**2 * a2 + (n - kk) ** 2 * b2 - (g + d) * (n - kk)
                coef_near = kk**2 * b2 + (n - kk) ** 2 * a2 - (g + d) * kk
                if positive_side:
                    alpha_coef, beta_coef = coef_far, coef_near
                    z_coef = (n - kk) * g - kk * d + n * (2 * kk - n) * b2
                    zc_coef = -kk * g + (n - kk) * d + n * (2 * kk - n) * b2
                else:
                    alpha_coef, beta_coef = coef_near, coef_far
                    z_coef = kk * g - (n - kk) * d - n * (2 * kk - n) * b2
                    zc_coef = -(n - kk) * g + kk * d - n * (2 * kk - n) * b2
                inner = (z_coef * z + zc_coef * z.conjugate() + g * d) / b2
                term = w * (alpha_coef * wa + beta_coef * wb + inner)
                re_parts.append(term.real)
                im_parts.append(term.imag)
        total, resid = fsum(re_parts), fsum(im_parts)
        assert abs(resid) <= 1e-9 * (abs(total) + 1.0), "imaginary residue in probability"
        return a2 ** (n - 1) * total
    # High-precision path: the double sum factored through T0/T1.
    with mpmath.workdps(_working_dps(coin, n)):
        b2_mp = mpmath.mpf(b2)
        neg_r = -b2_mp / mpmath.mpf(a2)
        t0, t1 = _pair_sums_mp(n, kk, neg_r)
        a_big = (kk**2 * a2 + (n - kk) ** 2 * b2) * t1**2 - 2 * (n - kk) * t0 * t1
        a_small = (kk**2 * b2 + (n - kk) ** 2 * a2) * t1**2 - 2 * kk * t0 * t1
        odd_part = (n - 2 * kk) * (t0 * t1 - n * b2_mp * t1**2)
        if not positive_side:
            a_big, a_small = a_small, a_big
            odd_part = -odd_part
        bracket = a_big * wa + a_small * wb + (odd_part * params.cross + t0**2) / b2_mp
        return float(mpmath.mpf(a2) ** (n - 1) * bracket)


def position_probability(params: WalkParams, n: int, k: int) -> float:
    """Closed-form ``P(X_n = k)`` for a coin with all entries nonzero.

    Interior positions use the alternating double sum; the extreme positions
    ``k = +-n`` have single-term closed forms.  Results are guarded by
    assertion (never clamped) against leaving ``[0, 1]``.
    """
    _require_generic(params.coin)
    if n < 1:
        raise ValueError(f"time must be >= 1, got {n}")
    if abs(k) > n or (n + k) % 2 != 0:
        raise ParityViolationError(f"position {k} unreachable at time {n}")
    coin = params.coin
    a2, b2 = coin.abs_a_sq, coin.abs_b_sq
    wa = abs(params.qubit.alpha) ** 2
    wb = abs(params.qubit.beta) ** 2
    scale = a2 ** (n - 1)
    if k == n:
        value = scale * (b2 * wa + a2 * wb - params.cross)
    elif k == -n:
        value = scale * (a2 * wa + b2 * wb + params.cross)
    elif k == 0:
        kk = n // 2
        value = _interior_probability(params, n, kk, positive_side=True)
        mirrored = _interior_probability(params, n, kk, positive_side=False)
        assert abs(value - mirrored) <= 1e-10 * (abs(value) + 1.0), (
            "central-position displays disagree"
        )
    else:
        kk = (n - abs(k)) // 2
        value = _interior_probability(params, n, kk, positive_side=k > 0)
    assert -1e-9 <= value <= 1.0 + 1e-9, f"probability {value} escapes [0, 1]"
    return value


def characteristic_function(params: WalkParams, n: int, xi: float) -> complex:
    """``E(exp(i xi X_n))`` via the closed form; total over all coin branches."""
    if n < 1:
        raise ValueError(f"time must be >= 1, got {n}")
    coin = params.coin
    wa = abs(params.qubit.alpha) ** 2
    wb = abs(params.qubit.beta) ** 2
    if coin.branch == BRANCH_B_ZERO:
        return complex(math.cos(n * xi), (wb - wa) * math.sin(n * xi))
    if coin.branch == BRANCH_A_ZERO:
        if n % 2 == 1:
            return complex(math.cos(xi), (wa - wb) * math.sin(xi))
        return complex(1.0, 0.0)
    cos0, sin0, rows, middle = _cf_tables(params, n)
    re_parts = [cos0 * math.cos(n * xi), middle]
    im_parts = [-sin0 * math.sin(n * xi)]
    for pos, cos_coef, sin_coef in rows:
        re_parts.append(cos_coef * math.cos(pos * xi))
        im_parts.append(-pos * sin_coef * math.sin(pos * xi))
    return complex(fsum(re_parts), fsum(im_parts))


def moment(params: WalkParams, n: int, m: int) -> float:
    """``E((X_n)^m)`` via the closed forms (no differentiation anywhere)."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    coin = params.coin
    wa = abs(params.qubit.alpha) ** 2
    wb = abs(params.qubit.beta) ** 2
    if coin.branch == BRANCH_B_ZERO:
        return float(n**m) * ((wb - wa) if m % 2 == 1 else 1.0)
    if coin.branch == BRANCH_A_ZERO:
        if n % 2 == 0:
            return 0.0
        return (wa - wb) if m % 2 == 1 else 1.0
    cos0, sin0, rows, _ = _cf_tables(params, n)
    if m % 2 == 1:
        parts = [sin0 * float(n) ** m]
        parts.extend(float(pos) ** (m + 1) * sin_coef for pos, _, sin_coef in rows)
        return -fsum(parts)
    parts = [cos0 * float(n) ** m]
    parts.extend(float(pos) ** m * cos_coef for pos, cos_coef, _ in rows)
    return fsum(parts)


def reduced_mean(params: WalkParams, n: int) -> float:
    """Mean of the walk via the reduced single-weight form, valid when the
    drift parameter ``mu`` vanishes (then the mean is proportional to
    ``|alpha|^2 - |beta|^2``)."""
    _require_generic(params.coin)
    if abs(params.mu) > 1e-12:
        raise PreconditionError(f"reduced mean requires mu = 0, got {params.mu!r}")
    if n < 3:
        raise ValueError(f"reduced mean needs n >= 3, got {n}")
    coin = params.coin
    a2, b2 = coin.abs_a_sq, coin.abs_b_sq
    if _digits_lost(coin, n) <= _MAX_FLOAT_DIGITS_LOST:
        r = b2 / a2
        parts = []
        for kk in range(1, (n - 1) // 2 + 1):
            pos_sq = (n - 2 * kk) ** 2
            for g in range(1, kk + 1):
                cg = comb(kk - 1, g - 1) * comb(n - kk - 1, g - 1)
                for d in range(1, kk + 1):
                    cd = comb(kk - 1, d - 1) * comb(n - kk - 1, d - 1)
                    parts.append(
                        (-r) ** (g + d) * cg * cd * pos_sq * (g + d) / (g * d)
                    )
        return -(a2 ** (n - 1) * params.weight_gap / (2.0 * b2)) * fsum(parts)
    with mpmath.workdps(_working_dps(coin, n)):
        neg_r = -mpmath.mpf(b2) / mpmath.mpf(a2)
        body = mpmath.mpf(0)
        for kk in range(1, (n - 1) // 2 + 1):
            t0, t1 = _pair_sums_mp(n, kk, neg_r)
            body += (n - 2 * kk) ** 2 * 2 * t0 * t1
        scale = mpmath.mpf(a2) ** (n - 1)
        return float(-(scale * mpmath.mpf(params.weight_gap) / (2 * mpmath.mpf(b2))) * body)
