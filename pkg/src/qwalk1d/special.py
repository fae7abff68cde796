"""Gauss hypergeometric series, Jacobi polynomials, and the sum identities.

The alternating binomial sums that appear in the walk's closed forms are
values of a terminating 2F1, hence of Jacobi polynomials.  This module
evaluates 2F1 directly from its series (terminating series are summed exactly
in rational arithmetic; inputs are floats and floats are rationals), provides
the Pfaff transformation as a residual diagnostic, and exposes the
combinatorial-sum/Jacobi-value identities for verification.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb

from .coin import Coin
from .errors import NonConvergentError, PoleAtCError

__all__ = [
    "gamma_value",
    "hyp2f1",
    "pfaff_residual",
    "jacobi_p",
    "rho_value",
    "jacobi_sum_identity",
]

_SERIES_CAP = 10**6
_SERIES_RTOL = 1e-16


def gamma_value(x: float) -> float:
    """The gamma function on the positive real axis.

    Delegates to the platform implementation (Lanczos-class accuracy, relative
    error well under 1e-13 on the range used here).
    """
    if x <= 0.0:
        raise ValueError(f"gamma_value is restricted to x > 0, got {x}")
    return math.gamma(x)


def _termination_index(a: float, b: float) -> int | None:
    """Index of the last nonzero series term, when a or b is a non-positive int."""
    candidates = [int(-v) for v in (a, b) if v <= 0.0 and float(v).is_integer()]
    return min(candidates) if candidates else None


def _check_pole(c: float, stop: int | None) -> None:
    # The recurrence divides by (c + j) for j = 0, 1, ...; a non-positive
    # integer c is a pole unless the series terminates strictly first.
    if c <= 0.0 and float(c).is_integer():
        pole_step = int(-c)
        if stop is None or pole_step < stop:
            raise PoleAtCError(f"c = {c} hits a pole of the series")


def hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric series ``2F1(a, b; c; z)`` by partial sums.

    Terminating series (``a`` or ``b`` a non-positive integer) are summed
    exactly term by term in rational arithmetic.  Otherwise requires
    ``|z| < 1``; summation stops once a term drops below 1e-16 of the partial
    sum, with a 1e6-term cap.

    Raises
    ------
    PoleAtCError
        If ``c`` is a non-positive integer reached before termination.
    NonConvergentError
        If ``|z| >= 1`` (non-terminating) or the term cap is hit.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    stop = _termination_index(a, b)
    _check_pole(c, stop)
    if stop is not None:
        af, bf, cf, zf = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
        term = Fraction(1)
        total = Fraction(1)
        for j in range(stop):
            term *= (af + j) * (bf + j) * zf
            term /= (cf + j) * (j + 1)
            total += term
        return float(total)
    if abs(z) >= 1.0:
        raise NonConvergentError(f"series does not converge for |z| = {abs(z)} >= 1")
    term = 1.0
    total = 1.0
    for j in range(_SERIES_CAP):
        term *= (a + j) * (b + j) * z / ((c + j) * (j + 1))
        total += term
        if abs(term) < _SERIES_RTOL * abs(total):
            return total
    raise NonConvergentError(f"series cap of {_SERIES_CAP} terms hit at z = {z}")


def pfaff_residual(a: float, b: float, c: float, z: float) -> float:
    """``|2F1(a,b;c;z) - (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))|``.

    A diagnostic: the transformation is an identity, so the residual measures
    evaluation error.  Both sides must be evaluable.
    """
    lhs = hyp2f1(a, b, c, z)
    rhs = (1.0 - z) ** (-a) * hyp2f1(a, c - b, c, z / (z - 1.0))
    return abs(lhs - rhs)


def jacobi_p(degree: int, nu: float, mu: float, x: float) -> float:
    """Jacobi polynomial ``P_degree^(nu, mu)(x)`` via its terminating 2F1 form.

    ``P_n^(nu,mu)(x) = Gamma(n+nu+1) / (Gamma(n+1) Gamma(nu+1))
    * 2F1(-n, n+nu+mu+1; nu+1; (1-x)/2)``.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if float(nu).is_integer() and nu >= 0:
        prefactor = float(comb(degree + int(nu), degree))
    else:
        prefactor = gamma_value(degree + nu + 1.0) / (
            gamma_value(degree + 1.0) * gamma_value(nu + 1.0)
        )
    return prefactor * hyp2f1(-degree, degree + nu + mu + 1.0, nu + 1.0, (1.0 - x) / 2.0)


def rho_value(n: int, k: int, i: int, abs_a_sq: float) -> float:
    """``P_(k-1)^(i, n-2k)(2|a|^2 - 1)`` for ``1 <= k <= n//2`` and ``i in {0, 1}``."""
    if i not in (0, 1):
        raise ValueError(f"i must be 0 or 1, got {i}")
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n//2, got k={k}, n={n}")
    return jacobi_p(k - 1, float(i), float(n - 2 * k), 2.0 * abs_a_sq - 1.0)


def jacobi_sum_identity(coin: Coin, n: int, k: int, i: int) -> tuple[float, float]:
    """Both sides of the binomial-sum/Jacobi-value identity.

    lhs: ``sum_(g=1..k) (-|b|^2/|a|^2)^(g-1) C(k-1,g-1) C(n-k-1,g-1) / g^i``
    (the ``1/g`` weight present only for ``i = 1``), summed exactly in rational
    arithmetic.

    rhs: ``|a|^(-2(k-1)) * rho(n,k,i) / k^i`` with the Jacobi value evaluated
    through :func:`jacobi_p`.
    """
    if i not in (0, 1):
        raise ValueError(f"i must be 0 or 1, got {i}")
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n//2, got k={k}, n={n}")
    abs_a_sq = coin.abs_a_sq
    ratio = -Fraction(coin.abs_b_sq) / Fraction(abs_a_sq)
    total = Fraction(0)
    power = Fraction(1)
    for g in range(1, k + 1):
        w = power * comb(k - 1, g - 1) * comb(n - k - 1, g - 1)
        total += w / g if i == 1 else w
        power *= ratio
    lhs = float(total)
    rhs = abs_a_sq ** (-(k - 1)) * rho_value(n, k, i, abs_a_sq)
    if i == 1:
        rhs /= k
    return lhs, rhs
