"""Distributions on Omega_p: finite mixtures of shifted ball Haar measures.

A Component is one term a * m_{x + Lambda_k}; level INF turns it into the
point mass a * E_x. A Distribution is a convex combination of components
whose weights sum to exactly 1.

The characteristic function of m_{x + Lambda_k} is (x, y) times the
indicator of A(Y, Lambda_k) = Lambda_{1-k}; a point mass contributes (x, y)
everywhere.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .characters import annihilator_level, character_value
from .cyclotomic import CyclotomicValue
from .errors import DistributionError, NotAutomorphismError, PrimeMismatchError
from .logging_config import get_logger
from .padic import (
    INF,
    BallLevel,
    Infinity,
    PAdicScalar,
    Prime,
    as_prime,
    format_literal,
    reduce_fraction,
)

log = get_logger("measure")


@dataclass(frozen=True, slots=True)
class Component:
    """weight * m_{shift + Lambda_level}, or weight * E_shift when level is INF."""

    weight: Fraction
    shift: PAdicScalar
    level: BallLevel

    def __post_init__(self) -> None:
        if not isinstance(self.weight, Fraction):
            object.__setattr__(self, "weight", Fraction(self.weight))
        if self.weight <= 0:
            raise DistributionError(f"component weight must be positive: {self.weight}")
        if self.weight > 1:
            raise DistributionError(f"component weight exceeds 1: {self.weight}")
        if not isinstance(self.level, (int, Infinity)) or isinstance(self.level, bool):
            raise DistributionError(f"ball level must be an integer or INF: {self.level!r}")

    @property
    def is_point(self) -> bool:
        return self.level is INF

    def coset_key(self) -> Fraction:
        """The shift reduced modulo the component's own ball."""
        if self.is_point:
            return self.shift.value
        return reduce_fraction(self.shift.value, self.shift.p, self.level)

    def describe(self) -> str:
        if self.is_point:
            return f"{format_literal(self.weight)}*E[{self.shift}]"
        return f"{format_literal(self.weight)}*m[{self.shift}+L{self.level}]"


@dataclass(frozen=True, slots=True)
class Distribution:
    """A probability distribution: a nonempty convex mixture of components."""

    prime: Prime
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise DistributionError("a distribution needs at least one component")
        for component in self.components:
            if component.shift.prime != self.prime:
                raise PrimeMismatchError(
                    f"component shift over p={component.shift.p} in a distribution over p={self.prime.p}"
                )
        total = sum((c.weight for c in self.components), Fraction(0))
        if total != 1:
            raise DistributionError(f"weights sum to {format_literal(total)}, not 1")

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def has_point_mass(self) -> bool:
        return any(c.is_point for c in self.components)

    @property
    def point_mass_weight(self) -> Fraction:
        return sum((c.weight for c in self.components if c.is_point), Fraction(0))

    def finite_levels(self) -> list[int]:
        return sorted({c.level for c in self.components if not c.is_point})

    def __str__(self) -> str:
        return " + ".join(c.describe() for c in self.components)


@dataclass(frozen=True, slots=True)
class CharFnProfile:
    """Characteristic function of a centered mixture as a step function of v(y).

    steps holds (t, value) pairs in ascending t: for v(y) >= t (and below
    the next threshold) the charfn equals value. Below the first threshold
    it equals tail, the total point-mass weight.
    """

    prime: Prime
    steps: tuple[tuple[int, Fraction], ...]
    tail: Fraction

    @property
    def thresholds(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.steps)

    def value_at(self, v: BallLevel) -> Fraction:
        if v is INF:
            return Fraction(1)
        value = self.tail
        for t, cumulative in self.steps:
            if v >= t:
                value = cumulative
            else:
                break
        return value


@dataclass(frozen=True, slots=True)
class DensityForm:
    """Exact probabilities of the Lambda_level cosets in the support, plus atoms."""

    prime: Prime
    level: BallLevel
    cells: tuple[tuple[Fraction, Fraction], ...]
    atoms: tuple[tuple[Fraction, Fraction], ...]


# -- construction -------------------------------------------------------------


def _coerce_scalar(value: PAdicScalar | int | Fraction | str, prime: Prime) -> PAdicScalar:
    if isinstance(value, PAdicScalar):
        return value
    return PAdicScalar.of(value, prime)


def make_component(
    weight: Fraction | int | str,
    shift: PAdicScalar | int | Fraction | str,
    level: BallLevel | None,
    prime: Prime | int,
) -> Component:
    """Build a component; level None means a point mass."""
    prime = as_prime(prime)
    if isinstance(weight, str):
        weight = PAdicScalar.of(weight, prime).value
    return Component(
        weight=Fraction(weight),
        shift=_coerce_scalar(shift, prime),
        level=INF if level is None else level,
    )


def make_distribution(
    components: Iterable[Component | Sequence],
    prime: Prime | int | None = None,
) -> Distribution:
    """Validate a list of components into a Distribution.

    Components may be given as Component objects or as (weight, shift, level)
    tuples, with level None or INF for a point mass.

    Raises:
        DistributionError: empty list, nonpositive weight, weights not summing to 1
    """
    items = list(components)
    if not items:
        raise DistributionError("a distribution needs at least one component")
    if prime is None:
        for item in items:
            if isinstance(item, Component):
                prime = item.shift.prime
                break
            if isinstance(item[1], PAdicScalar):
                prime = item[1].prime
                break
        if prime is None:
            raise DistributionError("cannot infer the prime; pass prime=")
    prime = as_prime(prime)
    built = []
    for item in items:
        if isinstance(item, Component):
            built.append(item)
        else:
            weight, shift, level = item
            built.append(make_component(weight, shift, level, prime))
    return Distribution(prime, tuple(built))


def haar(prime: Prime | int, level: int, shift: PAdicScalar | int | Fraction | str = 0) -> Distribution:
    """m_{shift + Lambda_level}."""
    prime = as_prime(prime)
    return Distribution(prime, (make_component(1, shift, level, prime),))


def degenerate(prime: Prime | int, x: PAdicScalar | int | Fraction | str = 0) -> Distribution:
    """E_x."""
    prime = as_prime(prime)
    return Distribution(prime, (make_component(1, x, None, prime),))


def mixture(prime: Prime | int, *terms: tuple) -> Distribution:
    """Shorthand: mixture(3, (w, level), (w, level, shift), ...); level None is a point."""
    prime = as_prime(prime)
    components = []
    for term in terms:
        weight, level, *rest = term
        shift = rest[0] if rest else 0
        components.append(make_component(weight, shift, level, prime))
    return Distribution(prime, tuple(components))


# -- characteristic function --------------------------------------------------


def charfn_eval(mu: Distribution, y: PAdicScalar) -> CyclotomicValue:
    """mu^(y) = sum_j a_j (x_j, y) [v(y) >= 1 - k_j], exactly."""
    if y.prime != mu.prime:
        raise PrimeMismatchError(f"cannot evaluate p={mu.p} charfn at p={y.p}")
    vy = y.valuation
    total = CyclotomicValue.zero(mu.prime)
    for c in mu.components:
        if not c.is_point and vy < annihilator_level(c.level):
            continue
        if c.shift.is_zero():
            total = total + c.weight
        else:
            total = total + character_value(c.shift, y).scale(c.weight)
    return total


def charfn_profile(mu: Distribution) -> CharFnProfile:
    """Step-function profile of the shift-stripped characteristic function."""
    tail = mu.point_mass_weight
    by_threshold: dict[int, Fraction] = defaultdict(Fraction)
    for c in mu.components:
        if not c.is_point:
            by_threshold[annihilator_level(c.level)] += c.weight
    steps = []
    cumulative = tail
    for t in sorted(by_threshold):
        cumulative += by_threshold[t]
        steps.append((t, cumulative))
    return CharFnProfile(prime=mu.prime, steps=tuple(steps), tail=tail)


# -- operations ---------------------------------------------------------------


def canonical_form(mu: Distribution) -> Distribution:
    """Merge components with the same level and coset; order by (level, coset)."""
    merged: dict[tuple, Fraction] = defaultdict(Fraction)
    for c in mu.components:
        merged[(c.level, c.coset_key())] += c.weight

    def order(key: tuple) -> tuple:
        level, rep = key
        return (1, 0, rep) if level is INF else (0, level, rep)

    components = tuple(
        Component(weight, PAdicScalar(mu.prime, rep), level)
        for (level, rep), weight in sorted(merged.items(), key=lambda kv: order(kv[0]))
    )
    return Distribution(mu.prime, components)


def convolve(mu: Distribution, nu: Distribution) -> Distribution:
    """mu * nu: m_{x+L_k} * m_{x'+L_k'} = m_{x+x'+L_min(k,k')}, E_x * E_x' = E_{x+x'}."""
    if mu.prime != nu.prime:
        raise PrimeMismatchError(f"cannot convolve p={mu.p} with p={nu.p}")
    components = [
        Component(a.weight * b.weight, a.shift + b.shift, min(a.level, b.level))
        for a, b in itertools.product(mu.components, nu.components)
    ]
    return canonical_form(Distribution(mu.prime, tuple(components)))


def reflect(mu: Distribution) -> Distribution:
    """mu-bar(E) = mu(-E): negate every shift."""
    return Distribution(
        mu.prime,
        tuple(Component(c.weight, -c.shift, c.level) for c in mu.components),
    )


def symmetrize(mu: Distribution) -> Distribution:
    """mu * mu-bar, whose characteristic function is |mu^|^2."""
    return convolve(mu, reflect(mu))


def pushforward(beta: PAdicScalar, mu: Distribution) -> Distribution:
    """Image of mu under x -> beta x: shifts scale, levels move by v(beta)."""
    if beta.is_zero():
        raise NotAutomorphismError("cannot push a distribution forward by 0")
    if beta.prime != mu.prime:
        raise PrimeMismatchError(f"cannot push p={mu.p} forward by a p={beta.p} scalar")
    v = beta.valuation
    return Distribution(
        mu.prime,
        tuple(Component(c.weight, c.shift * beta, c.level + v) for c in mu.components),
    )


def strip_shifts(mu: Distribution) -> Distribution:
    """Same weights and levels, every shift set to 0."""
    zero = PAdicScalar(mu.prime, Fraction(0))
    return Distribution(
        mu.prime,
        tuple(Component(c.weight, zero, c.level) for c in mu.components),
    )


def common_shift(mu: Distribution) -> tuple[PAdicScalar, Distribution] | None:
    """Write mu = E_x * nu with nu centered, if possible.

    Returns (x, strip_shifts(mu)) or None when the components disagree on
    their shifts modulo their own balls.
    """
    finest = max(mu.components, key=lambda c: (c.level is INF, c.level if c.level is not INF else 0))
    x = finest.shift
    for c in mu.components:
        difference = c.shift - x
        if c.is_point:
            if not difference.is_zero():
                return None
        elif difference.valuation < c.level:
            return None
    return x, strip_shifts(mu)


def support(mu: Distribution) -> list[Component]:
    """sigma(mu) as a list of maximal balls and atoms (weights kept per piece)."""
    canonical = canonical_form(mu).components
    pieces = []
    for c in canonical:
        covered = any(
            other is not c
            and not other.is_point
            and (c.level is INF or other.level < c.level)
            and (c.shift - other.shift).valuation >= other.level
            for other in canonical
        )
        if not covered:
            pieces.append(c)
    return pieces


def canonical_density(mu: Distribution) -> DensityForm:
    """Exact coset probabilities at the finest finite level, plus the atom list."""
    p = mu.p
    levels = mu.finite_levels()
    atoms: dict[Fraction, Fraction] = defaultdict(Fraction)
    for c in mu.components:
        if c.is_point:
            atoms[c.shift.value] += c.weight
    if not levels:
        return DensityForm(mu.prime, INF, (), tuple(sorted(atoms.items())))
    n_star = levels[-1]
    cells: dict[Fraction, Fraction] = defaultdict(Fraction)
    for c in mu.components:
        if c.is_point:
            continue
        count = p ** (n_star - c.level)
        share = c.weight / count
        step = Fraction(p) ** c.level
        for t in range(count):
            rep = reduce_fraction(c.shift.value + t * step, p, n_star)
            cells[rep] += share
    log.debug(f"canonical density at level {n_star}: {len(cells)} cells, {len(atoms)} atoms")
    return DensityForm(
        mu.prime,
        n_star,
        tuple(sorted(cells.items())),
        tuple(sorted(atoms.items())),
    )


def idempotent_level(mu: Distribution) -> BallLevel | None:
    """k with mu = m_{x + Lambda_k} (INF for a point mass), None if not idempotent.

    Cosets are merged one level at a time from the finest ball upward, so
    no level ever holds more cells than mu has components.
    """
    points = {c.shift.value for c in mu.components if c.is_point}
    levels = mu.finite_levels()
    if points:
        return INF if not levels and len(points) == 1 else None

    p = mu.p
    by_level: dict[int, list[Component]] = defaultdict(list)
    for c in mu.components:
        by_level[c.level].append(c)

    level = levels[-1]
    cells: dict[Fraction, Fraction] = defaultdict(Fraction)
    for c in by_level[level]:
        cells[c.coset_key()] += c.weight
    while len(cells) > 1 or level > levels[0]:
        # every parent coset must be split evenly over all p children
        parents: dict[Fraction, list[Fraction]] = defaultdict(list)
        for rep, weight in cells.items():
            parents[reduce_fraction(rep, p, level - 1)].append(weight)
        if any(len(children) != p or len(set(children)) != 1 for children in parents.values()):
            return None
        level -= 1
        cells = defaultdict(Fraction, {rep: sum(children) for rep, children in parents.items()})
        for c in by_level.get(level, ()):
            cells[c.coset_key()] += c.weight
    log.debug(f"idempotent at level {level}")
    return level


def is_degenerate(mu: Distribution) -> bool:
    """True iff mu is a single point mass."""
    return all(c.is_point for c in mu.components) and len({c.shift.value for c in mu.components}) == 1


def is_idempotent(mu: Distribution) -> bool:
    """True iff mu is a shifted m_{Lambda_k} or a point mass."""
    return idempotent_level(mu) is not None
