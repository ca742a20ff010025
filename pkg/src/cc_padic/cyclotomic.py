"""Exact arithmetic in the p^m-th cyclotomic fields.

Values of characteristic functions are rational combinations of p-power
roots of unity. A CyclotomicValue stores the coordinates of such a number
in the power basis 1, t, ..., t^(phi-1) of Q(zeta_{p^m}), reduced modulo
Phi_{p^m}(t) = sum_{j<p} t^(j p^(m-1)).

Values are always kept at the smallest order m that contains them, so a
rational value has m = 0 and equality is plain field equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import PrimeMismatchError
from .padic import Angle, Prime, as_prime, format_literal


def phi_length(p: int, m: int) -> int:
    """Degree of Q(zeta_{p^m}) over Q."""
    if m == 0:
        return 1
    return p ** (m - 1) * (p - 1)


def _reduce(full: list[Fraction], p: int, m: int) -> list[Fraction]:
    """Reduce a vector indexed by exponents mod p^m to the power basis."""
    if m == 0:
        return [sum(full, Fraction(0))]
    n = p**m
    step = p ** (m - 1)
    phi = n - step
    full = list(full)
    # t^phi = -(1 + t^step + ... + t^((p-2) step)); one pass suffices
    for e in range(phi, n):
        c = full[e]
        if c:
            full[e] = Fraction(0)
            base = e - phi
            for j in range(p - 1):
                full[base + j * step] -= c
    return full[:phi]


def _demote(coefficients: list[Fraction], p: int, m: int) -> tuple[list[Fraction], int]:
    """Move a value to the smallest subfield containing it."""
    while m > 0:
        nonzero = [e for e, c in enumerate(coefficients) if c]
        if m == 1:
            if any(e != 0 for e in nonzero):
                break
            coefficients = [coefficients[0] if coefficients else Fraction(0)]
        else:
            if any(e % p for e in nonzero):
                break
            coefficients = coefficients[::p]
        m -= 1
    return coefficients, m


class CyclotomicValue:
    """An exact element of Q(zeta_{p^m})."""

    __slots__ = ("prime", "order", "coefficients")

    def __init__(self, prime: Prime | int, order: int, coefficients: Iterable[Fraction]):
        prime = as_prime(prime)
        p = prime.p
        coeffs = [Fraction(c) for c in coefficients]
        size = phi_length(p, order)
        if len(coeffs) != size:
            raise ValueError(
                f"order {order} over p={p} needs {size} coefficients, got {len(coeffs)}"
            )
        coeffs, order = _demote(coeffs, p, order)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicValue is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def rational(cls, q: Fraction | int, prime: Prime | int) -> CyclotomicValue:
        return cls(prime, 0, [Fraction(q)])

    @classmethod
    def zero(cls, prime: Prime | int) -> CyclotomicValue:
        return cls.rational(0, prime)

    @classmethod
    def one(cls, prime: Prime | int) -> CyclotomicValue:
        return cls.rational(1, prime)

    @classmethod
    def from_angle(cls, angle: Angle) -> CyclotomicValue:
        """exp(2 pi i a) for an angle a = r/p^m."""
        p = angle.prime.p
        m = angle.order_exponent
        full = [Fraction(0)] * (p**m)
        full[angle.value.numerator if m else 0] = Fraction(1)
        return cls(angle.prime, m, _reduce(full, p, m))

    # -- structure -----------------------------------------------------------

    def promote(self, order: int) -> list[Fraction]:
        """Coordinates of this value in the power basis of a larger order."""
        if order < self.order:
            raise ValueError(f"cannot promote order {self.order} down to {order}")
        p = self.prime.p
        if order == self.order:
            return list(self.coefficients)
        full = [Fraction(0)] * (p**order)
        stride = p ** (order - self.order)
        for e, c in enumerate(self.coefficients):
            full[e * stride] = c
        return _reduce(full, p, order)

    def _full(self, order: int) -> list[Fraction]:
        """Coordinates indexed by exponent mod p^order (unreduced length)."""
        p = self.prime.p
        full = [Fraction(0)] * (p**order)
        for e, c in enumerate(self.promote(order)):
            full[e] = c
        return full

    def is_rational(self) -> bool:
        return self.order == 0

    def rational_value(self) -> Fraction:
        if self.order != 0:
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    def terms(self) -> list[tuple[Angle, Fraction]]:
        """Nonzero power-basis terms as (angle of the basis root, coefficient)."""
        p = self.prime.p
        denominator = p**self.order
        return [
            (Angle.of(Fraction(e, denominator), self.prime), c)
            for e, c in enumerate(self.coefficients)
            if c
        ]

    # -- arithmetic ----------------------------------------------------------

    def _as_value(self, other: object) -> CyclotomicValue | None:
        if isinstance(other, CyclotomicValue):
            if other.prime != self.prime:
                raise PrimeMismatchError(
                    f"cannot combine values over p={self.prime.p} and p={other.prime.p}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue.rational(other, self.prime)
        return None

    def __add__(self, other: object) -> CyclotomicValue:
        other = self._as_value(other)
        if other is None:
            return NotImplemented
        order = max(self.order, other.order)
        a, b = self.promote(order), other.promote(order)
        return CyclotomicValue(self.prime, order, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicValue:
        return CyclotomicValue(self.prime, self.order, [-c for c in self.coefficients])

    def __sub__(self, other: object) -> CyclotomicValue:
        other = self._as_value(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> CyclotomicValue:
        return (-self) + other

    def __mul__(self, other: object) -> CyclotomicValue:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._as_value(other)
        if other is None:
            return NotImplemented
        if self.order == 0:
            return other.scale(self.coefficients[0])
        if other.order == 0:
            return self.scale(other.coefficients[0])
        p = self.prime.p
        order = max(self.order, other.order)
        n = p**order
        a, b = self.promote(order), other.promote(order)
        full = [Fraction(0)] * n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    full[(i + j) % n] += x * y
        return CyclotomicValue(self.prime, order, _reduce(full, p, order))

    __rmul__ = __mul__

    def scale(self, q: Fraction | int) -> CyclotomicValue:
        """Multiply by a rational."""
        q = Fraction(q)
        return CyclotomicValue(self.prime, self.order, [q * c for c in self.coefficients])

    def conjugate(self) -> CyclotomicValue:
        """Complex conjugate: t^e -> t^(-e)."""
        if self.order == 0:
            return self
        p = self.prime.p
        n = p**self.order
        full = [Fraction(0)] * n
        for e, c in enumerate(self.coefficients):
            full[(-e) % n] += c
        return CyclotomicValue(self.prime, self.order, _reduce(full, p, self.order))

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.order == 0 and self.coefficients[0] == other
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        return (
            self.prime == other.prime
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        if self.order == 0:
            return hash(self.coefficients[0])
        return hash((self.prime.p, self.order, self.coefficients))

    def __repr__(self) -> str:
        return f"CyclotomicValue(p={self.prime.p}, order={self.order}, {self})"

    def __str__(self) -> str:
        if self.order == 0:
            return format_literal(self.coefficients[0])
        parts = [f"{format_literal(c)}*e({angle})" for angle, c in self.terms()]
        return " + ".join(parts) if parts else "0"
