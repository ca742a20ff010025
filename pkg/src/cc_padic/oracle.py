"""Brute-force independence check on a finite quotient of Omega_p.

The oracle never touches characteristic functions. It projects mu1 and
mu2 onto the cyclic group Lambda_lo / Lambda_hi, enumerates the joint law
of (xi1 + xi2, xi1 + alpha xi2) there and tests whether it is the product
of its marginals.

Quotient elements are stored by their canonical representative (the
output of reduce_fraction at level hi). Internally they are indexed by
i with x = p^lo * i, so the group law becomes integer addition mod p^span.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import PrimeMismatchError, WindowError
from .independence import (
    IndependenceVerdict,
    VerificationWindow,
    _check_inputs,
    _coarsest_level,
    _resolution,
    reduce_negative_valuation,
)
from .logging_config import get_logger
from .measure import Distribution
from .padic import INF, PAdicScalar, fraction_valuation, reduce_fraction

log = get_logger("oracle")


@dataclass(frozen=True, slots=True)
class QuotientWindow:
    """The finite group Lambda_lo / Lambda_hi."""

    p: int
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise WindowError(f"empty quotient Lambda_{self.lo} / Lambda_{self.hi}")

    @property
    def span(self) -> int:
        return self.hi - self.lo

    @property
    def size(self) -> int:
        return self.p**self.span

    def index(self, rep: Fraction) -> int:
        return int(rep / Fraction(self.p) ** self.lo)

    def rep(self, index: int) -> Fraction:
        return Fraction(self.p) ** self.lo * (index % self.size)

    def dual(self) -> VerificationWindow:
        """Characters that see this quotient: Lambda_{1-hi} / Lambda_{1-lo}."""
        return VerificationWindow(p=self.p, w_low=1 - self.hi, w_high=1 - self.lo, deep_probes=0)

    def __str__(self) -> str:
        return f"L{self.lo}/L{self.hi}"


@dataclass(frozen=True, slots=True)
class QuotientDistribution:
    """Exact coset probabilities of a distribution projected onto a quotient.

    faithful is True when the projection determines the distribution, i.e.
    there is no point mass.
    """

    window: QuotientWindow
    probabilities: dict[Fraction, Fraction]
    faithful: bool = True

    def __post_init__(self) -> None:
        total = sum(self.probabilities.values(), Fraction(0))
        if total != 1:
            raise WindowError(f"quotient probabilities sum to {total}, not 1")

    def weights(self) -> tuple[dict[int, int], int]:
        """Integer weights over a common denominator, keyed by index."""
        denominator = math.lcm(*(q.denominator for q in self.probabilities.values()))
        return (
            {
                self.window.index(rep): int(q * denominator)
                for rep, q in self.probabilities.items()
            },
            denominator,
        )


@dataclass(frozen=True, slots=True)
class JointLaw:
    """Joint law of (L1, L2) on the quotient, as integer counts over a denominator."""

    window: QuotientWindow
    counts: dict[tuple[int, int], int]
    denominator: int
    faithful: bool = True

    @property
    def probabilities(self) -> dict[tuple[Fraction, Fraction], Fraction]:
        rep = self.window.rep
        return {
            (rep(s), rep(t)): Fraction(c, self.denominator)
            for (s, t), c in sorted(self.counts.items())
        }

    def _marginal_counts(self, axis: int) -> dict[int, int]:
        marginal: dict[int, int] = defaultdict(int)
        for key, c in self.counts.items():
            marginal[key[axis]] += c
        return marginal

    def marginal(self, axis: int) -> QuotientDistribution:
        """Law of L1 (axis 0) or L2 (axis 1)."""
        return QuotientDistribution(
            self.window,
            {
                self.window.rep(i): Fraction(c, self.denominator)
                for i, c in sorted(self._marginal_counts(axis).items())
            },
            self.faithful,
        )

    def first_violation(self) -> tuple[int, int] | None:
        """A cell where the joint law differs from the product of marginals.

        Checking the joint support is enough: if P(s, t) = P1(s) P2(t) there,
        the product measure already has all its mass on that support.
        """
        m1, m2 = self._marginal_counts(0), self._marginal_counts(1)
        d = self.denominator
        for key in sorted(self.counts):
            s, t = key
            if self.counts[key] * d != m1[s] * m2[t]:
                return key
        return None

    def factorizes(self) -> bool:
        return self.first_violation() is None


def oracle_window(
    mu1: Distribution,
    mu2: Distribution,
    alpha: PAdicScalar,
    level: int | None = None,
) -> QuotientWindow:
    """Smallest quotient on which the joint law decides independence.

    lo covers every ball and shift (after the negative-valuation reduction),
    hi is the resolution level of the checker unless level overrides it.
    With point masses present hi also reaches one level below alpha
    times the finest ball.
    """
    _check_inputs(mu1, mu2, alpha)
    mu1, mu2, alpha, _ = reduce_negative_valuation(mu1, mu2, alpha)
    coarsest = min(_coarsest_level(mu1), _coarsest_level(mu2))
    lo = 0 if coarsest is INF else coarsest
    if level is not None:
        hi = level
    else:
        resolution, _ = _resolution(mu1, mu2, alpha)
        levels = mu1.finite_levels() + mu2.finite_levels()
        hi = lo + 1
        if levels:
            hi = max(hi, max(levels) + (1 if (1 - alpha).valuation is INF else 0))
        if resolution is not None:
            hi = max(hi, resolution)
        if levels and (mu1.has_point_mass or mu2.has_point_mass):
            # atoms do not smooth: alpha times the finest ball must stay visible
            hi = max(hi, max(levels) + alpha.valuation + 1)
    if hi <= lo:
        raise WindowError(f"level {hi} must exceed the coarsest level {lo}")
    window = QuotientWindow(mu1.p, lo, hi)
    log.debug(f"oracle quotient {window} ({window.size} cosets)")
    return window


def project_to_quotient(mu: Distribution, window: QuotientWindow) -> QuotientDistribution:
    """Push mu down to Lambda_lo / Lambda_hi.

    Raises:
        WindowError: a ball finer than hi, or mass outside Lambda_lo
    """
    if mu.p != window.p:
        raise PrimeMismatchError(f"distribution over p={mu.p}, quotient over p={window.p}")
    p = window.p
    probabilities: dict[Fraction, Fraction] = defaultdict(Fraction)
    for c in mu.components:
        if fraction_valuation(c.coset_key(), p) < window.lo:
            raise WindowError(f"shift {c.shift} lies outside Lambda_{window.lo}")
        if c.is_point:
            probabilities[reduce_fraction(c.shift.value, p, window.hi)] += c.weight
            continue
        if c.level < window.lo:
            raise WindowError(f"ball Lambda_{c.level} is larger than Lambda_{window.lo}")
        if c.level > window.hi:
            raise WindowError(f"ball Lambda_{c.level} is finer than the quotient level {window.hi}")
        count = p ** (window.hi - c.level)
        share = c.weight / count
        step = Fraction(p) ** c.level
        for t in range(count):
            probabilities[reduce_fraction(c.shift.value + t * step, p, window.hi)] += share
    return QuotientDistribution(window, dict(probabilities), faithful=not mu.has_point_mass)


def joint_law(q1: QuotientDistribution, q2: QuotientDistribution, alpha: PAdicScalar) -> JointLaw:
    """P(s, t) = sum of q1(g1) q2(g2) over g1 + g2 = s, g1 + alpha g2 = t.

    Raises:
        WindowError: the quotients differ, or alpha does not preserve them
    """
    window = q1.window
    if q2.window != window:
        raise WindowError(f"quotients differ: {q1.window} and {q2.window}")
    if alpha.p != window.p:
        raise PrimeMismatchError(f"alpha over p={alpha.p}, quotient over p={window.p}")
    if alpha.is_zero() or alpha.valuation < 0:
        raise WindowError(f"alpha = {alpha} does not map {window} into itself")
    n = window.size
    a = int(reduce_fraction(alpha.value, window.p, window.span))
    w1, d1 = q1.weights()
    w2, d2 = q2.weights()
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for g1, c1 in w1.items():
        for g2, c2 in w2.items():
            counts[((g1 + g2) % n, (g1 + a * g2) % n)] += c1 * c2
    log.debug(f"joint law on {window}: {len(w1)} x {len(w2)} support pairs, {len(counts)} cells")
    return JointLaw(window, dict(counts), d1 * d2, faithful=q1.faithful and q2.faithful)


def quotient_convolution(q1: QuotientDistribution, q2: QuotientDistribution) -> QuotientDistribution:
    """Law of g1 + g2 computed directly on representatives."""
    window = q1.window
    if q2.window != window:
        raise WindowError(f"quotients differ: {q1.window} and {q2.window}")
    law: dict[Fraction, Fraction] = defaultdict(Fraction)
    for x, a in q1.probabilities.items():
        for y, b in q2.probabilities.items():
            law[reduce_fraction(x + y, window.p, window.hi)] += a * b
    return QuotientDistribution(window, dict(law), q1.faithful and q2.faithful)


def oracle_check(
    mu1: Distribution,
    mu2: Distribution,
    alpha: PAdicScalar,
    window: QuotientWindow | None = None,
    level: int | None = None,
) -> IndependenceVerdict:
    """Independence by joint-law factorization.

    "dependent" is always conclusive. "independent" is conclusive only
    when neither distribution has a point mass; otherwise it holds at
    this quotient level only. The witness of a dependent verdict is the
    pair of cosets (s of L1, t of L2) where factorization fails.
    """
    _check_inputs(mu1, mu2, alpha)
    if window is None:
        window = oracle_window(mu1, mu2, alpha, level=level)
    r1, r2, r_alpha, swapped = reduce_negative_valuation(mu1, mu2, alpha)
    q1 = project_to_quotient(r1, window)
    q2 = project_to_quotient(r2, window)
    law = joint_law(q1, q2, r_alpha)
    hit = law.first_violation()
    faithful = law.faithful

    notes = [f"quotient {window}"]
    if swapped:
        notes.append("v(alpha) < 0: joint law of (L2, L1) computed with 1/alpha")
    if not faithful:
        notes.append("point masses present: independence holds at this level only")

    witness = None
    if hit is not None:
        s, t = (PAdicScalar(mu1.prime, window.rep(i)) for i in hit)
        witness = (t, s) if swapped else (s, t)
        log.info(f"oracle: joint law does not factor at L1 = {witness[0]}, L2 = {witness[1]}")
    else:
        log.info(f"oracle: joint law factors on {window}")

    dual = window.dual()
    return IndependenceVerdict(
        independent=hit is None,
        witness=witness,
        window=VerificationWindow(
            p=dual.p, w_low=dual.w_low, w_high=dual.w_high, deep_probes=0, exact=faithful
        ),
        method="oracle",
        conclusive=hit is not None or faithful,
        reduced_negative_k=swapped,
        pairs_checked=len(q1.probabilities) * len(q2.probabilities),
        notes=tuple(notes),
    )


__all__ = [
    "JointLaw",
    "QuotientDistribution",
    "QuotientWindow",
    "joint_law",
    "oracle_check",
    "oracle_window",
    "project_to_quotient",
    "quotient_convolution",
]
