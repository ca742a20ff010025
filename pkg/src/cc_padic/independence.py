"""Independence of L1 = xi1 + xi2 and L2 = xi1 + alpha xi2.

By the characteristic-function criterion the forms are independent iff

    mu1^(u + v) mu2^(u + alpha v) = mu1^(u) mu2^(u) mu1^(v) mu2^(alpha v)

for all characters u, v (multiplication by alpha is self-adjoint for the
pairing, so alpha acts on characters as itself).

The checker evaluates this on every pair of coset representatives of
Lambda_{W_low} / Lambda_{W_high}:

- W_high = 1 - L where Lambda_L holds every ball and shift. All the
  characteristic functions involved are then constant on Lambda_{W_high}
  cosets, so representatives suffice.
- W_low = 1 - M - margin_low, where M is a resolution level. For ball-only
  mixtures with alpha != 1, the pair (L1, L2) is invariant under
  Lambda_M x Lambda_M with M = max(K1, K1 + w, K2 + w) (K_j the finest ball
  level of mu_j, w = v(1 - alpha)), so independence on Y reduces to the
  equation on Lambda_{1-M}: the check is then a decision procedure. For
  purely atomic mixtures M separates every value of L1 and L2, which is
  exact as well. Mixtures of atoms and balls get the same bound plus deep
  probes below the window and an optional random audit.

Negative v(alpha) is first reduced away: (mu1, mu2, alpha) and
(mu1, alpha mu2, 1/alpha) describe the same pair of forms with L1 and L2
swapped.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .characters import annihilator_level
from .cyclotomic import CyclotomicValue
from .errors import NotAutomorphismError, PrimeMismatchError, WindowError
from .logging_config import get_logger
from .measure import (
    Distribution,
    charfn_eval,
    charfn_profile,
    common_shift,
    pushforward,
)
from .padic import (
    INF,
    BallLevel,
    PAdicScalar,
    fraction_valuation,
    int_valuation,
    reduce_fraction,
)
from .sampling import random_scalar

log = get_logger("independence")

Value = Fraction | CyclotomicValue

_INT64_SAFE = 2**62


@dataclass(frozen=True, slots=True)
class VerificationWindow:
    """Characters enumerated over Lambda_{w_low} / Lambda_{w_high}."""

    p: int
    w_low: int
    w_high: int
    deep_probes: int = 2
    thresholds: tuple[int, ...] = ()
    resolution: BallLevel = 0
    exact: bool = True

    @property
    def span(self) -> int:
        return self.w_high - self.w_low

    @property
    def classes(self) -> int:
        """Coset representatives per variable."""
        return self.p**self.span

    @property
    def pairs(self) -> int:
        return self.classes**2


@dataclass(frozen=True, slots=True)
class IndependenceVerdict:
    """Outcome of check_independence.

    witness is given in the coordinates of the caller's (mu1, mu2, alpha),
    after undoing any negative-valuation reduction.
    """

    independent: bool
    witness: tuple[PAdicScalar, PAdicScalar] | None
    window: VerificationWindow
    method: str = "exact-window"
    conclusive: bool = True
    reduced_negative_k: bool = False
    pairs_checked: int = 0
    probes_checked: int = 0
    audited: int = 0
    notes: tuple[str, ...] = field(default=())


# -- reductions --------------------------------------------------------------


def canonicalize_forms(
    alpha1: PAdicScalar,
    alpha2: PAdicScalar,
    beta1: PAdicScalar,
    beta2: PAdicScalar,
    mu1: Distribution,
    mu2: Distribution,
) -> tuple[PAdicScalar, Distribution, Distribution]:
    """Reduce (a1 xi1 + a2 xi2, b1 xi1 + b2 xi2) to (xi1' + xi2', xi1' + alpha xi2').

    xi_j' = a_j xi_j, and the second form is divided by b1.
    """
    for name, coefficient in (("alpha1", alpha1), ("alpha2", alpha2), ("beta1", beta1), ("beta2", beta2)):
        if coefficient.is_zero():
            raise NotAutomorphismError(f"coefficient {name} is zero")
    alpha = (beta2 * alpha1) / (beta1 * alpha2)
    return alpha, pushforward(alpha1, mu1), pushforward(alpha2, mu2)


def reduce_negative_valuation(
    mu1: Distribution, mu2: Distribution, alpha: PAdicScalar
) -> tuple[Distribution, Distribution, PAdicScalar, bool]:
    """Replace xi2 by alpha xi2 and alpha by 1/alpha when v(alpha) < 0."""
    if alpha.is_zero():
        raise NotAutomorphismError("alpha = 0 is not an automorphism of Omega_p")
    if alpha.valuation >= 0:
        return mu1, mu2, alpha, False
    log.debug(f"v(alpha) = {alpha.valuation} < 0: swapping to alpha' = 1/alpha")
    return mu1, pushforward(alpha, mu2), 1 / alpha, True


def lemma5_check(alpha: PAdicScalar, m: int) -> bool:
    """(I - alpha) Lambda_m contains Lambda_m, i.e. v(1 - alpha) <= 0."""
    if alpha.is_zero():
        raise NotAutomorphismError("alpha = 0 is not an automorphism of Omega_p")
    if m is INF:
        raise WindowError("lemma5_check needs a finite level")
    return (1 - alpha).valuation <= 0


# -- window ------------------------------------------------------------------


def _prepare(mu: Distribution) -> Distribution:
    """Strip a common translate; leave genuinely mixed shifts alone."""
    split = common_shift(mu)
    if split is None:
        return mu
    return split[1]


def _coarsest_level(mu: Distribution) -> BallLevel:
    """Largest L with every ball and shift inside Lambda_L."""
    level: BallLevel = INF
    for c in mu.components:
        if not c.is_point:
            level = min(level, c.level)
        level = min(level, fraction_valuation(c.coset_key(), mu.p))
    return level


def _atom_values(mu: Distribution) -> list[Fraction]:
    return sorted({c.shift.value for c in mu.components if c.is_point})


def _separation_level(values: list[Fraction], p: int) -> int | None:
    """Smallest N with all values distinct modulo Lambda_N."""
    best = None
    for a, b in itertools.combinations(values, 2):
        v = fraction_valuation(a - b, p) + 1
        best = v if best is None else max(best, v)
    return best


def _resolution(mu1: Distribution, mu2: Distribution, alpha: PAdicScalar) -> tuple[int | None, bool]:
    """Resolution level M and whether the resulting window is a decision."""
    p = mu1.p
    w = (1 - alpha).valuation
    levels1, levels2 = mu1.finite_levels(), mu2.finite_levels()
    has_points = mu1.has_point_mass or mu2.has_point_mass

    candidates = []
    if levels1 or levels2:
        k1 = levels1[-1] if levels1 else levels2[-1]
        k2 = levels2[-1] if levels2 else levels1[-1]
        w_eff = 1 if w is INF else w
        candidates.append(max(k1, k1 + w_eff, k2 + w_eff))
        if has_points:
            # an atom gives no smoothing, so alpha v must reach below every ball
            candidates.append(max(k1, k2) + alpha.valuation + max(0, w_eff))

    if has_points:
        atoms1, atoms2 = _atom_values(mu1), _atom_values(mu2)
        if atoms1 and atoms2:
            a = alpha.value
            sums = sorted({x + y for x in atoms1 for y in atoms2})
            images = sorted({x + a * y for x in atoms1 for y in atoms2})
            for values in (sums, images):
                separation = _separation_level(values, p)
                if separation is not None:
                    candidates.append(separation)

    exact = (not has_points and w is not INF) or not (levels1 or levels2)
    if not candidates:
        return None, exact
    return max(candidates), exact


def verification_window(
    mu1: Distribution,
    mu2: Distribution,
    alpha: PAdicScalar,
    margin_low: int = 2,
    deep_probes: int = 2,
) -> VerificationWindow:
    """Window of character classes that decides the functional equation for this configuration."""
    _check_inputs(mu1, mu2, alpha)
    mu1, mu2, alpha, _ = reduce_negative_valuation(mu1, mu2, alpha)
    mu1, mu2 = _prepare(mu1), _prepare(mu2)

    thresholds = sorted(
        set(charfn_profile(mu1).thresholds) | set(charfn_profile(mu2).thresholds)
    )
    coarsest = min(_coarsest_level(mu1), _coarsest_level(mu2))
    w_high = annihilator_level(coarsest) if coarsest is not INF else 1
    if thresholds:
        w_high = max(w_high, thresholds[-1])

    resolution, exact = _resolution(mu1, mu2, alpha)
    if resolution is None:
        w_low = w_high - 1
    else:
        w_low = min(annihilator_level(resolution) - margin_low, w_high - 1)
    window = VerificationWindow(
        p=mu1.p,
        w_low=w_low,
        w_high=w_high,
        deep_probes=deep_probes,
        thresholds=tuple(thresholds),
        resolution=INF if resolution is None else resolution,
        exact=exact,
    )
    log.debug(
        f"window [{w_low}, {w_high}) thresholds={thresholds} resolution={window.resolution} "
        f"classes={window.classes} pairs={window.pairs} exact={exact}"
    )
    return window


def _fit_window(
    window: VerificationWindow, mu1: Distribution, mu2: Distribution, alpha: PAdicScalar
) -> VerificationWindow:
    """Clear exact on a window that stops above the resolution level.

    mu1, mu2 and alpha are the reduced, shift-stripped inputs.
    """
    resolution, exact = _resolution(mu1, mu2, alpha)
    exact = exact and window.exact
    if resolution is not None and window.w_low > annihilator_level(resolution):
        log.warning(
            f"window bottom {window.w_low} is above L{annihilator_level(resolution)}, "
            f"the characters that resolve these distributions"
        )
        exact = False
    if exact == window.exact:
        return window
    return replace(window, exact=exact)


def _check_inputs(mu1: Distribution, mu2: Distribution, alpha: PAdicScalar) -> None:
    if alpha.is_zero():
        raise NotAutomorphismError("alpha = 0 is not an automorphism of Omega_p")
    if not (mu1.prime == mu2.prime == alpha.prime):
        raise PrimeMismatchError(
            f"distributions and alpha over different primes: {mu1.p}, {mu2.p}, {alpha.p}"
        )


# -- evaluation --------------------------------------------------------------


def functional_equation_sides(
    mu1: Distribution,
    mu2: Distribution,
    alpha: PAdicScalar,
    u: PAdicScalar,
    v: PAdicScalar,
) -> tuple[CyclotomicValue, CyclotomicValue]:
    """Both sides of the functional equation at (u, v), exactly."""
    lhs = charfn_eval(mu1, u + v) * charfn_eval(mu2, u + alpha * v)
    rhs = (
        charfn_eval(mu1, u)
        * charfn_eval(mu2, u)
        * charfn_eval(mu1, v)
        * charfn_eval(mu2, alpha * v)
    )
    return lhs, rhs


def _grid_values(mu: Distribution, window: VerificationWindow) -> list[Value]:
    """Characteristic function at y = p^w_low * i for every class i."""
    p = window.p
    n = window.classes
    if all(c.shift.is_zero() for c in mu.components):
        profile = charfn_profile(mu)
        return [
            profile.value_at(INF if i == 0 else window.w_low + int_valuation(i, p))
            for i in range(n)
        ]
    base = Fraction(p) ** window.w_low
    return [charfn_eval(mu, PAdicScalar(mu.prime, base * i)) for i in range(n)]


def _scaled_integers(values: list[Value]) -> tuple[list[int], int] | None:
    """Clear denominators when every value is rational."""
    if not all(isinstance(x, Fraction) for x in values):
        return None
    denominator = math.lcm(*(x.denominator for x in values))
    return [int(x * denominator) for x in values], denominator


def _scan_grid(
    f1: list[Value], f2: list[Value], a_index: int, n: int
) -> tuple[tuple[int, int] | None, int]:
    """First (i, j) in lexicographic order violating the functional equation on the grid."""
    scaled1, scaled2 = _scaled_integers(f1), _scaled_integers(f2)
    if scaled1 is not None and scaled2 is not None and (scaled1[1] * scaled2[1]) ** 2 < _INT64_SAFE:
        (i1, d1), (i2, d2) = scaled1, scaled2
        x1 = np.array(i1, dtype=np.int64)
        x2 = np.array(i2, dtype=np.int64)
        js = np.arange(n, dtype=np.int64)
        a_js = (a_index % n) * js % n
        g = x1 * x2
        h = x1 * x2[a_js]
        # lhs = x1*x2/(d1 d2), rhs = g*h/(d1 d2)^2
        scale = d1 * d2
        for i in range(n):
            lhs = x1[(i + js) % n] * x2[(i + a_js) % n]
            bad = lhs * scale != g[i] * h
            if bad.any():
                j = int(np.argmax(bad))
                return (i, j), i * n + j + 1
        return None, n * n
    checked = 0
    g = [f1[i] * f2[i] for i in range(n)]
    h = [f1[j] * f2[(a_index * j) % n] for j in range(n)]
    for i in range(n):
        for j in range(n):
            checked += 1
            lhs = f1[(i + j) % n] * f2[(i + a_index * j) % n]
            if lhs != g[i] * h[j]:
                return (i, j), checked
    return None, checked


def _probe_points(window: VerificationWindow, prime) -> list[PAdicScalar]:
    p = window.p
    return [
        PAdicScalar(prime, Fraction(r) * Fraction(p) ** (window.w_low - j))
        for j in range(1, window.deep_probes + 1)
        for r in range(1, p)
    ]


def check_independence(
    mu1: Distribution,
    mu2: Distribution,
    alpha: PAdicScalar,
    window: VerificationWindow | None = None,
    sample_count: int = 0,
    seed: int = 0,
    margin_low: int = 2,
) -> IndependenceVerdict:
    """Decide whether L1 = xi1 + xi2 and L2 = xi1 + alpha xi2 are independent.

    Raises:
        NotAutomorphismError: alpha = 0
        WindowError: the window does not cover the distributions
    """
    _check_inputs(mu1, mu2, alpha)
    if window is None:
        window = verification_window(mu1, mu2, alpha, margin_low=margin_low)
    r1, r2, r_alpha, swapped = reduce_negative_valuation(mu1, mu2, alpha)
    r1, r2 = _prepare(r1), _prepare(r2)

    coarsest = min(_coarsest_level(r1), _coarsest_level(r2))
    needed_high = annihilator_level(coarsest) if coarsest is not INF else window.w_low + 1
    if window.w_low >= window.w_high:
        raise WindowError(f"empty window [{window.w_low}, {window.w_high})")
    if window.w_high < needed_high:
        raise WindowError(
            f"window top {window.w_high} is below the periodicity level {needed_high} of the distributions"
        )
    if window.p != mu1.p:
        raise WindowError(f"window built for p={window.p}, distributions over p={mu1.p}")
    fitted = _fit_window(window, r1, r2, r_alpha)
    shallow = fitted.exact != window.exact
    window = fitted

    n = window.classes
    a_index = int(reduce_fraction(r_alpha.value, window.p, window.span))
    f1 = _grid_values(r1, window)
    f2 = _grid_values(r2, window)
    hit, checked = _scan_grid(f1, f2, a_index, n)

    notes = []
    if swapped:
        notes.append("v(alpha) < 0: checked (mu1, alpha*mu2, 1/alpha) with L1 and L2 swapped")
    if shallow:
        notes.append("the given window does not decide these inputs: independence holds on the window only")

    def verdict(independent: bool, witness, probes: int, audited: int, method: str) -> IndependenceVerdict:
        if witness is not None and swapped:
            witness = (witness[1], witness[0])
        return IndependenceVerdict(
            independent=independent,
            witness=witness,
            window=window,
            method=method,
            conclusive=(not independent) or window.exact,
            reduced_negative_k=swapped,
            pairs_checked=checked,
            probes_checked=probes,
            audited=audited,
            notes=tuple(notes),
        )

    if hit is not None:
        base = Fraction(window.p) ** window.w_low
        u = PAdicScalar(mu1.prime, base * hit[0])
        v = PAdicScalar(mu1.prime, base * hit[1])
        log.info(f"dependent: the functional equation fails at u={u}, v={v} (pair {checked} of {window.pairs})")
        return verdict(False, (u, v), 0, 0, "exact-window")

    def fails(u: PAdicScalar, v: PAdicScalar) -> bool:
        lhs, rhs = functional_equation_sides(r1, r2, r_alpha, u, v)
        return lhs != rhs

    probes = 0
    if r1.has_point_mass or r2.has_point_mass:
        base = Fraction(window.p) ** window.w_low
        grid = [PAdicScalar(mu1.prime, base * i) for i in range(n)]
        deep = _probe_points(window, mu1.prime)
        for d in deep:
            for other in grid + deep:
                for u, v in ((d, other), (other, d)):
                    probes += 1
                    if fails(u, v):
                        log.warning(f"deep probe below the window found a violation at u={u}, v={v}")
                        notes.append("violation found by a deep probe below the window")
                        return verdict(False, (u, v), probes, 0, "exact-window")

    audited = 0
    if sample_count:
        rng = random.Random(seed)
        for _ in range(sample_count):
            u = random_scalar(rng, mu1.prime, window.w_low - 3, window.w_high + 3)
            v = random_scalar(rng, mu1.prime, window.w_low - 3, window.w_high + 3)
            audited += 1
            if fails(u, v):
                log.warning(f"random audit found a violation outside the window at u={u}, v={v}")
                notes.append("violation found by the random audit")
                return verdict(False, (u, v), probes, audited, "audit")

    log.info(
        f"independent on window [{window.w_low}, {window.w_high}) "
        f"({checked} pairs, {probes} probes, {audited} audited)"
    )
    return verdict(True, None, probes, audited, "exact-window")


def stabilizing_level(
    mu1: Distribution,
    mu2: Distribution,
    window: VerificationWindow,
) -> int | None:
    """Least l in the window with mu1^ = mu2^ = 1 on Lambda_l.

    Only meaningful for centered mixtures, whose characteristic functions
    are nonnegative rationals; returns None otherwise.
    """
    if any(not c.shift.is_zero() for c in mu1.components + mu2.components):
        return None
    profiles = (charfn_profile(mu1), charfn_profile(mu2))
    for level in range(window.w_low, window.w_high + 1):
        if all(profile.value_at(level) == 1 for profile in profiles):
            return level
    return None


__all__ = [
    "IndependenceVerdict",
    "VerificationWindow",
    "canonicalize_forms",
    "check_independence",
    "functional_equation_sides",
    "lemma5_check",
    "reduce_negative_valuation",
    "stabilizing_level",
    "verification_window",
]
