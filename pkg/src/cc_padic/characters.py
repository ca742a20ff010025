"""The duality pairing of Omega_p with itself.

The value of the character y at x is exp(2 pi i t) for an angle t in
Z(p^infinity). Two independent implementations are kept:

- pairing: the closed form t = frac_p(x * y / p)
- pairing_eq1: the literal double digit sum
  sum_n x_n sum_{s >= n} y_{-s} p^(-s+n-1), which only has finitely many
  nonzero terms for given x and y

They must always agree; the second one exists to check the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicValue
from .errors import PrimeMismatchError, WindowError
from .padic import INF, Angle, PAdicScalar, frac_p

__all__ = [
    "Angle",
    "DigitWindow",
    "angle_add",
    "angle_negate",
    "angle_scale",
    "annihilator_level",
    "character_value",
    "pairing",
    "pairing_eq1",
    "sufficient_window",
]


def annihilator_level(m: int) -> int:
    """A(Y, Lambda_m) = Lambda_{-m+1}."""
    return -m + 1


def _same_prime(x: PAdicScalar, y: PAdicScalar) -> None:
    if x.prime != y.prime:
        raise PrimeMismatchError(f"cannot pair p={x.p} with p={y.p}")


def pairing(x: PAdicScalar, y: PAdicScalar) -> Angle:
    """The angle t with (x, y) = exp(2 pi i t)."""
    _same_prime(x, y)
    return frac_p(x * y / x.p)


def character_value(x: PAdicScalar, y: PAdicScalar) -> CyclotomicValue:
    """(x, y) as an exact root of unity."""
    return CyclotomicValue.from_angle(pairing(x, y))


@dataclass(frozen=True, slots=True)
class DigitWindow:
    """Digit indices lo <= j < hi read from both arguments of the pairing."""

    lo: int
    hi: int


def sufficient_window(x: PAdicScalar, y: PAdicScalar) -> DigitWindow:
    """Smallest window holding every digit that enters the double sum.

    A term x_n y_{-s} p^(n-s-1) with s >= n needs v(x) <= n and
    v(y) <= -s, so n ranges over [v(x), -v(y)] and -s over [v(y), -v(x)].
    """
    vx, vy = x.valuation, y.valuation
    if vx is INF or vy is INF or vx > -vy:
        return DigitWindow(0, 0)
    return DigitWindow(min(vx, vy), max(-vy, -vx) + 1)


def pairing_eq1(x: PAdicScalar, y: PAdicScalar, window: DigitWindow | None = None) -> Angle:
    """The pairing computed digit by digit from the double sum.

    Raises:
        WindowError: the window misses digits that contribute
    """
    _same_prime(x, y)
    needed = sufficient_window(x, y)
    if window is None:
        window = needed
    if needed.lo < needed.hi and (window.lo > needed.lo or window.hi < needed.hi):
        raise WindowError(
            f"digit window [{window.lo}, {window.hi}) misses [{needed.lo}, {needed.hi})"
        )
    p = x.p
    lo, hi = window.lo, window.hi
    if lo >= hi:
        return Angle.zero(x.prime)
    xd = x.digits(lo, hi)
    yd = y.digits(lo, hi)
    total = Fraction(0)
    for i, x_n in enumerate(xd):
        if not x_n:
            continue
        n = lo + i
        # s runs from n upwards while y_{-s} stays inside the window
        for s in range(n, -lo + 1):
            j = -s - lo
            if j < 0 or j >= len(yd):
                continue
            y_s = yd[j]
            if y_s:
                total += Fraction(x_n * y_s) * Fraction(p) ** (-s + n - 1)
    return Angle.of(total, x.prime)


def angle_add(a: Angle, b: Angle) -> Angle:
    return a + b


def angle_negate(a: Angle) -> Angle:
    return -a


def angle_scale(a: Angle, n: int) -> Angle:
    return a.scale(n)
