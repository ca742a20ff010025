"""Exact arithmetic on the rational subfield of the p-adic numbers.

Elements are exact rationals n/d carried together with their prime. This
is enough for everything the library does: balls, shifts, automorphisms
alpha = p^k * c and the counterexample construction all have rational
data, and every check only looks at finitely many digits.

Conventions:
- Lambda_k = p^k * Delta_p is the ball of elements with valuation >= k.
- Level INF denotes the trivial subgroup {0}; v(0) = INF.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from .errors import (
    LiteralError,
    NotAutomorphismError,
    NotPrimeError,
    PrimeMismatchError,
    ZeroDivisionPadicError,
)


@functools.total_ordering
class Infinity:
    """Positive infinity for valuations and ball levels.

    Compares greater than every integer and absorbs integer addition.
    """

    _instance: Infinity | None = None

    def __new__(cls) -> Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Infinity)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Infinity)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("cc_padic.INF")

    def __add__(self, other: int | Infinity) -> Infinity:
        if isinstance(other, (int, Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: int) -> Infinity:
        if isinstance(other, Infinity):
            raise ArithmeticError("INF - INF is undefined")
        if isinstance(other, int):
            return self
        return NotImplemented


INF = Infinity()

# A valuation or a ball level: an integer, or INF.
Valuation: TypeAlias = int | Infinity
BallLevel: TypeAlias = int | Infinity

_LITERAL = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, slots=True)
class Prime:
    """A prime number p, checked by trial division."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrimeError(f"Prime must be an integer: {self.p!r}")
        if not _is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


def as_prime(prime: Prime | int) -> Prime:
    """Accept either a Prime or a plain integer."""
    if isinstance(prime, Prime):
        return prime
    return Prime(prime)


def int_valuation(n: int, p: int) -> Valuation:
    """p-adic valuation of an integer."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def fraction_valuation(q: Fraction, p: int) -> Valuation:
    """p-adic valuation of a rational."""
    if q == 0:
        return INF
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def reduce_fraction(q: Fraction, p: int, n: int) -> Fraction:
    """Canonical representative of q + Lambda_n as a plain Fraction.

    The representative is the truncated digit sum sum_{j<n} q_j p^j, a
    nonnegative rational with p-power denominator, below p^n.
    """
    if q == 0:
        return Fraction(0)
    den = q.denominator
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    # v(q) >= -e; when q is already in Lambda_n the representative is 0
    if fraction_valuation(q, p) >= n:
        return Fraction(0)
    modulus = p ** (n + e)
    residue = (q.numerator * pow(den, -1, modulus)) % modulus
    return Fraction(residue, p**e)


@dataclass(frozen=True, slots=True)
class PAdicScalar:
    """An exact rational viewed as an element of Omega_p."""

    prime: Prime
    value: Fraction

    @classmethod
    def of(cls, value: int | Fraction | str, prime: Prime | int) -> PAdicScalar:
        """Build a scalar from an int, Fraction or rational literal."""
        prime = as_prime(prime)
        if isinstance(value, str):
            return parse_scalar(value, prime)
        return cls(prime, Fraction(value))

    # -- structure ---------------------------------------------------------

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def valuation(self) -> Valuation:
        return fraction_valuation(self.value, self.prime.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def unit_part(self) -> Fraction:
        """The unit c with self = p^v * c."""
        if self.value == 0:
            raise NotAutomorphismError("zero has no unit part")
        return self.value / Fraction(self.p) ** self.valuation

    def digits(self, lo: int, hi: int) -> list[int]:
        return digits(self, lo, hi)

    def reduce(self, n: int) -> PAdicScalar:
        return reduce_mod_level(self, n)

    # -- field operations --------------------------------------------------

    def _coerce(self, other: PAdicScalar | int | Fraction) -> Fraction:
        if isinstance(other, PAdicScalar):
            if other.prime != self.prime:
                raise PrimeMismatchError(
                    f"cannot combine elements over p={self.p} and p={other.p}"
                )
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented

    def __add__(self, other: PAdicScalar | int | Fraction) -> PAdicScalar:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PAdicScalar(self.prime, self.value + value)

    __radd__ = __add__

    def __sub__(self, other: PAdicScalar | int | Fraction) -> PAdicScalar:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PAdicScalar(self.prime, self.value - value)

    def __rsub__(self, other: int | Fraction) -> PAdicScalar:
        return PAdicScalar(self.prime, Fraction(other) - self.value)

    def __mul__(self, other: PAdicScalar | int | Fraction) -> PAdicScalar:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PAdicScalar(self.prime, self.value * value)

    __rmul__ = __mul__

    def __truediv__(self, other: PAdicScalar | int | Fraction) -> PAdicScalar:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if value == 0:
            raise ZeroDivisionPadicError(f"division of {self} by zero")
        return PAdicScalar(self.prime, self.value / value)

    def __rtruediv__(self, other: int | Fraction) -> PAdicScalar:
        if self.value == 0:
            raise ZeroDivisionPadicError(f"division of {other} by zero")
        return PAdicScalar(self.prime, Fraction(other) / self.value)

    def __neg__(self) -> PAdicScalar:
        return PAdicScalar(self.prime, -self.value)

    def __pow__(self, exponent: int) -> PAdicScalar:
        if exponent < 0 and self.value == 0:
            raise ZeroDivisionPadicError("zero to a negative power")
        return PAdicScalar(self.prime, self.value**exponent)

    def __str__(self) -> str:
        return format_literal(self.value)


def format_literal(q: Fraction | int) -> str:
    """Render a rational as an exact "n" or "n/d" literal."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_scalar(text: str, prime: Prime | int) -> PAdicScalar:
    """Parse a rational literal "n" or "n/d" into a normalized scalar.

    Raises:
        LiteralError: malformed literal or zero denominator
    """
    prime = as_prime(prime)
    if not isinstance(text, str):
        raise LiteralError(f"expected a rational literal string, got {text!r}")
    match = _LITERAL.fullmatch(text)
    if not match:
        raise LiteralError(f"malformed rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise LiteralError(f"zero denominator in literal: {text!r}")
    return PAdicScalar(prime, Fraction(numerator, denominator))


def valuation(x: PAdicScalar) -> Valuation:
    """v(x), with v(0) = INF."""
    return x.valuation


def digits(x: PAdicScalar, lo: int, hi: int) -> list[int]:
    """Base-p digits x_j for lo <= j < hi."""
    if lo > hi:
        raise ValueError(f"empty digit window [{lo}, {hi})")
    if lo == hi:
        return []
    p = x.p
    truncated = reduce_fraction(x.value, p, hi)
    # truncated has denominator p^e; shift so that index lo lands on 0
    shift = max(0, -lo, int_valuation(truncated.denominator, p))
    scaled = truncated * Fraction(p) ** shift
    assert scaled.denominator == 1
    n = scaled.numerator // p ** (lo + shift)
    out = []
    for _ in range(hi - lo):
        n, r = divmod(n, p)
        out.append(r)
    return out


def reduce_mod_level(x: PAdicScalar, n: int) -> PAdicScalar:
    """Canonical representative of the coset x + Lambda_n."""
    if isinstance(n, Infinity):
        return x
    return PAdicScalar(x.prime, reduce_fraction(x.value, x.p, n))


@dataclass(frozen=True, slots=True)
class AutomorphismDecomposition:
    """alpha = p^k * c with c a unit, c0 = c mod p."""

    k: int
    c0: int
    one_minus_alpha_valuation: Valuation


def decompose_automorphism(alpha: PAdicScalar) -> AutomorphismDecomposition:
    """Split a nonzero alpha into p^k * c and record v(1 - alpha)."""
    if alpha.is_zero():
        raise NotAutomorphismError("alpha = 0 is not an automorphism of Omega_p")
    p = alpha.p
    k = alpha.valuation
    unit = alpha.unit_part()
    c0 = (unit.numerator * pow(unit.denominator, -1, p)) % p
    return AutomorphismDecomposition(
        k=k,
        c0=c0,
        one_minus_alpha_valuation=(1 - alpha).valuation,
    )


@dataclass(frozen=True, slots=True)
class Angle:
    """An element of Z(p^infinity): a rational r/p^m in [0, 1), added mod 1."""

    prime: Prime
    value: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.value < 1:
            raise ValueError(f"angle out of [0, 1): {self.value}")
        den = self.value.denominator
        while den % self.prime.p == 0:
            den //= self.prime.p
        if den != 1:
            raise ValueError(f"angle denominator is not a power of {self.prime.p}: {self.value}")

    @classmethod
    def of(cls, value: Fraction | int, prime: Prime | int) -> Angle:
        """Reduce a p-power-denominator rational mod 1."""
        value = Fraction(value)
        return cls(as_prime(prime), value - (value.numerator // value.denominator))

    @classmethod
    def zero(cls, prime: Prime | int) -> Angle:
        return cls(as_prime(prime), Fraction(0))

    @property
    def order_exponent(self) -> int:
        """m with denominator p^m."""
        return int_valuation(self.value.denominator, self.prime.p)

    def _check(self, other: Angle) -> None:
        if other.prime != self.prime:
            raise PrimeMismatchError(
                f"cannot combine angles over p={self.prime.p} and p={other.prime.p}"
            )

    def __add__(self, other: Angle) -> Angle:
        self._check(other)
        return Angle.of(self.value + other.value, self.prime)

    def __sub__(self, other: Angle) -> Angle:
        self._check(other)
        return Angle.of(self.value - other.value, self.prime)

    def __neg__(self) -> Angle:
        return Angle.of(-self.value, self.prime)

    def scale(self, n: int) -> Angle:
        """n * self in Z(p^infinity)."""
        return Angle.of(self.value * n, self.prime)

    def __str__(self) -> str:
        return format_literal(self.value)


def frac_p(z: PAdicScalar) -> Angle:
    """p-adic fractional part: the t = r/p^m in [0, 1) with v(z - t) >= 0."""
    return Angle(z.prime, reduce_fraction(z.value, z.p, 0))
