"""Continuous maps on [0, 1] and constructive intermediate-value procedures.

A map carries two pieces of data: an ``enclose`` function producing a
rational interval that covers the image of any input subinterval at a
requested precision, and a modulus of uniform continuity (inputs within
2^-modulus(p) have images within 2^-p).  The modulus is required data:
an executable artifact cannot derive it, so the representation assumes it.

Three intermediate-value procedures are provided: the approximate version
(bisection to a uniform depth, certified by an interval check), the
thirds construction for locally non-constant maps (driven by a
caller-supplied apartness oracle, always re-verified), and bisection with
apartness witnesses at enumerated rational midpoints.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coding import pair, unpair
from .errors import FuelExhausted, PreconditionFailed
from .real import (Apartness, CReal, Direction, RationalInterval, rho0, rho1,
                   rho2, try_apart, verify_lt)
from .streams import FugitiveSpec

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_FUEL = 128


def _half_pow(p: int) -> Fraction:
    return Fraction(1, 1 << p) if p >= 0 else Fraction(1 << -p)


def _clamp01(iv: RationalInterval) -> RationalInterval:
    lo, hi = max(iv.lo, _ZERO), min(iv.hi, _ONE)
    if lo > hi:
        raise ValueError("interval lies outside [0, 1]")
    return RationalInterval(lo, hi)


class ContinuousMap:
    """A continuous function on [0, 1] given by enclosures plus a modulus."""

    def __init__(self, enclose: Callable[[RationalInterval, int], RationalInterval],
                 modulus: Callable[[int], int]):
        self.enclose = enclose
        self.modulus = modulus
        self._points: dict[Fraction, CReal] = {}
        self._lock = threading.Lock()

    def apply(self, x: CReal) -> CReal:
        """The image f(x) as a constructive real.

        Interval n is the running intersection of the enclosures of x's
        intervals at rising precision; every one contains the true value,
        so the intersections are nonempty, nested and dwindling.
        """
        enclose = self.enclose

        def raw(n: int) -> RationalInterval:
            return enclose(_clamp01(x.interval(n)), n)

        def step(prev: RationalInterval, n: int) -> RationalInterval:
            nxt = raw(n + 1)
            lo, hi = max(prev.lo, nxt.lo), min(prev.hi, nxt.hi)
            if lo > hi:
                raise ValueError("enclosures drifted apart; map violates its contract")
            return RationalInterval(lo, hi)

        return CReal.from_steps(raw(0), step)

    def at(self, q) -> CReal:
        """The value at a rational point, cached per point."""
        q = Fraction(q)
        if not _ZERO <= q <= _ONE:
            raise ValueError("point outside [0, 1]")
        with self._lock:
            cached = self._points.get(q)
            if cached is not None:
                return cached
        value = self.apply(CReal(lambda n, q=q: RationalInterval(q, q)))
        with self._lock:
            return self._points.setdefault(q, value)


@dataclass(frozen=True)
class PiecewiseLinearSpec:
    """Breakpoints 0 = t0 < ... < tr = 1 with a constructive real value at each."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[CReal, ...]

    def __post_init__(self):
        bps = tuple(Fraction(t) for t in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) != len(self.values):
            raise ValueError("breakpoints and values must have equal length")
        if len(bps) < 2 or bps[0] != 0 or bps[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")


def _ceil_log2(q: Fraction) -> int:
    # Smallest s >= 0 with 2^s >= q.
    s = 0
    v = Fraction(1)
    while v < q:
        v *= 2
        s += 1
    return s


def pwl(spec: PiecewiseLinearSpec, node_fuel: int = 96) -> ContinuousMap:
    """The piecewise-linear map through the given nodes.

    Enclosures evaluate the endpoints of each covered piece by linear
    interpolation over node approximations at precision p+2 and take the
    hull; on a linear piece the endpoint hull is an exact image enclosure.
    The modulus comes from a slope bound over all pieces.
    """
    bps = spec.breakpoints
    values = spec.values

    def node_iv(i: int, p: int) -> RationalInterval:
        return values[i].approx(p, node_fuel)

    def eval_point(t: Fraction, p: int) -> RationalInterval:
        # Rightmost piece starting at or before t.
        i = 0
        while i + 2 < len(bps) and bps[i + 1] <= t:
            i += 1
        lam = (t - bps[i]) / (bps[i + 1] - bps[i])
        a, b = node_iv(i, p), node_iv(i + 1, p)
        return RationalInterval((1 - lam) * a.lo + lam * b.lo,
                                (1 - lam) * a.hi + lam * b.hi)

    def enclose(iv: RationalInterval, p: int) -> RationalInterval:
        if not (_ZERO <= iv.lo <= iv.hi <= _ONE):
            raise ValueError("enclose input must lie within [0, 1]")
        points = [iv.lo] + [t for t in bps if iv.lo < t < iv.hi] + [iv.hi]
        parts = [eval_point(t, p + 2) for t in points]
        return RationalInterval(min(part.lo for part in parts),
                                max(part.hi for part in parts))

    slope_exp: list[int | None] = [None]

    def modulus(p: int) -> int:
        if slope_exp[0] is None:
            bound = Fraction(0)
            for i in range(len(bps) - 1):
                a, b = node_iv(i, 4), node_iv(i + 1, 4)
                rise = max(abs(b.hi - a.lo), abs(a.hi - b.lo))
                bound = max(bound, rise / (bps[i + 1] - bps[i]))
            slope_exp[0] = _ceil_log2(bound) if bound > 0 else 0
        return p + slope_exp[0]

    return ContinuousMap(enclose, modulus)


def identity_map() -> ContinuousMap:
    return pwl(PiecewiseLinearSpec((_ZERO, _ONE),
                                   (CReal.from_rational(0), CReal.from_rational(1))))


def f0(f: FugitiveSpec) -> ContinuousMap:
    """Linear through 0, flat at 1/2 + rho1 on the middle third, up to 1."""
    half = CReal.from_rational(Fraction(1, 2))
    mid = half + rho1(f)
    return pwl(PiecewiseLinearSpec(
        (_ZERO, Fraction(1, 3), Fraction(2, 3), _ONE),
        (CReal.from_rational(0), mid, mid, CReal.from_rational(1))))


def f1(f: FugitiveSpec) -> ContinuousMap:
    """Linear through 0, rho0 at the midpoint and rho2 at 1."""
    return pwl(PiecewiseLinearSpec(
        (_ZERO, Fraction(1, 2), _ONE),
        (CReal.from_rational(0), rho0(f), rho2(f))))


def f2(f: FugitiveSpec, g: FugitiveSpec) -> ContinuousMap:
    """Two flat plateaus, 1/2 + rho1 over f on [1/5, 2/5] and over g on [3/5, 4/5]."""
    half = CReal.from_rational(Fraction(1, 2))
    mid_f = half + rho1(f)
    mid_g = half + rho1(g)
    return pwl(PiecewiseLinearSpec(
        (_ZERO, Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5), _ONE),
        (CReal.from_rational(0), mid_f, mid_f, mid_g, mid_g, CReal.from_rational(1))))


# Certification: an upper bound on |f(x) - y| computed from enclosures alone.

def distance_bound(f: ContinuousMap, x: CReal, y: CReal, q: int, fuel: int,
                   x_fuel: int | None = None) -> Fraction:
    """A certified upper bound on |f(x) - y|, inspecting at precision q."""
    xi = _clamp01(x.approx(f.modulus(q), fuel if x_fuel is None else x_fuel))
    img = f.enclose(xi, q)
    yi = y.approx(q, fuel)
    return max(img.hi - yi.lo, yi.hi - img.lo)


def certified_within(f: ContinuousMap, x: CReal, y: CReal, p: int, fuel: int,
                     attempts: int = 6) -> bool:
    """Try inspection precisions q = p+1, p+2, ... for a bound below 2^-p."""
    target = _half_pow(p)
    for q in range(p + 1, p + 1 + attempts):
        try:
            if distance_bound(f, x, y, q, fuel) < target:
                return True
        except FuelExhausted:
            break
    return False


def approx_ivt(f: ContinuousMap, y: CReal, p: int, fuel: int = DEFAULT_FUEL) -> CReal:
    """A point x with certified |f(x) - y| < 2^-p, for f(0) <= y <= f(1).

    Bisection: at each midpoint m the enclosure of f(m) and the current
    approximation of y are narrowed below 2^-(p+1) and the half keeping
    the crossing is selected; the uniform modulus gives an a-priori depth
    of modulus(p+1) + 2.  The returned real keeps bisecting lazily beyond
    that depth.
    """
    guard = p + 4
    y_iv = y.approx(guard, fuel)
    at0 = f.enclose(RationalInterval(_ZERO, _ZERO), guard)
    at1 = f.enclose(RationalInterval(_ONE, _ONE), guard)
    if not (at0.lo <= y_iv.hi and y_iv.lo <= at1.hi):
        raise PreconditionFailed("need f(0) <= y <= f(1) in the enclosure sense")

    eps = _half_pow(p + 1)

    def step(prev: RationalInterval, _n: int) -> RationalInterval:
        lo, hi = prev
        m = (lo + hi) / 2
        point = RationalInterval(m, m)
        for level in range(fuel + 1):
            s = f.enclose(point, level)
            yl = y.interval(level)
            if s.width < eps and yl.width < eps:
                break
        else:
            raise FuelExhausted("enclosures did not narrow; malformed map or real")
        if s.hi < yl.lo + eps:
            return RationalInterval(m, hi)
        return RationalInterval(lo, m)

    x = CReal.from_steps(RationalInterval(_ZERO, _ONE), step)
    depth = f.modulus(p + 1) + 2
    x.interval(depth)
    if not certified_within(f, x, y, p, fuel):
        raise FuelExhausted("result could not be certified at the requested precision")
    return x


@dataclass(frozen=True)
class IvtResult:
    """A constructed point with the best interval-certified distance bound.

    ``certified_precision`` is the largest p with bound < 2^-p, or None when
    even p = 0 fails (e.g. the target value was outside the map's range).
    """

    x: CReal
    certified_precision: int | None
    bound: Fraction | None


def _certify_at_depth(f: ContinuousMap, x: CReal, y: CReal, avail: int,
                      x_fuel: int, fuel: int = DEFAULT_FUEL) -> tuple[int | None, Fraction | None]:
    # Deepest inspection precision whose modulus is honored by width 2^-avail;
    # x is read only up to x_fuel (the depth actually constructed), while y and
    # the enclosures may narrow freely.
    q = 0
    while f.modulus(q + 1) <= avail:
        q += 1
    if q == 0:
        return None, None
    try:
        bound = distance_bound(f, x, y, q, fuel, x_fuel=x_fuel)
    except FuelExhausted:
        return None, None
    if bound >= 1:
        return None, bound
    p = 0
    while p + 1 < q + 16 and bound < _half_pow(p + 1):
        p += 1
    return p, bound


def ivt_locally_nonconstant(f: ContinuousMap, y: CReal,
                            oracle: Callable[[Fraction, Fraction], tuple[Fraction, Apartness]],
                            depth: int, fuel: int = DEFAULT_FUEL) -> IvtResult:
    """The thirds construction: the oracle supplies, for any current interval,
    a middle-third rational whose value is apart from y; the construction keeps
    the side where the crossing must lie.  Widths obey width(n) <= (2/3)^n.

    Oracle answers are re-verified against raw intervals; a lying oracle is an
    error.  ``depth`` rounds are forced eagerly and determine the certified
    precision; the returned real keeps consulting the oracle lazily.
    """
    def step(prev: RationalInterval, _n: int) -> RationalInterval:
        lo, hi = prev
        a = (2 * lo + hi) / 3
        b = (lo + 2 * hi) / 3
        q, w = oracle(a, b)
        if not (a < q < b):
            raise ValueError(f"oracle point {q} outside the middle third ({a}, {b})")
        z = f.at(q)
        if w.direction is Direction.LESS:
            ok = verify_lt(z, y, w.witness)
        else:
            ok = verify_lt(y, z, w.witness)
        if not ok:
            raise ValueError("oracle witness failed verification")
        if w.direction is Direction.LESS:
            return RationalInterval(q, hi)  # f(q) < y: x lies right of q
        return RationalInterval(lo, q)

    x = CReal.from_steps(RationalInterval(_ZERO, _ONE), step)
    x.interval(depth)
    # Largest m with 2^-m >= (2/3)^depth.
    avail = (3 ** depth // (1 << depth)).bit_length() - 1
    precision, bound = _certify_at_depth(f, x, y, avail, x_fuel=max(depth, 1), fuel=fuel)
    return IvtResult(x, precision, bound)


# The fixed enumeration of rationals in [0, 1]: index n maps through unpair to
# (u, v) and then to u/(u+v); index 0 is 0.  The reduced fraction a/b sits at
# index pair(a, b-a).

def rational_at(n: int) -> Fraction:
    u, v = unpair(n)
    if u + v == 0:
        return Fraction(0)
    return Fraction(u, u + v)


def rational_index(q) -> int:
    q = Fraction(q)
    if not _ZERO <= q <= _ONE:
        raise ValueError("enumeration covers [0, 1] only")
    return pair(q.numerator, q.denominator - q.numerator)


def ivt_countable_exceptions(f: ContinuousMap, y: CReal,
                             apart_at: Callable[[int], Apartness],
                             depth: int, fuel: int = DEFAULT_FUEL) -> IvtResult:
    """Bisection driven by apartness witnesses for f at the enumerated rationals.

    At step n the midpoint m is located in the fixed rational enumeration and
    ``apart_at`` is asked for a witness of f(m) # y at that index; the witness
    is re-verified, then the half keeping the crossing is selected.  Width at
    step n is exactly 2^-n.
    """
    def step(prev: RationalInterval, _n: int) -> RationalInterval:
        lo, hi = prev
        m = (lo + hi) / 2
        w = apart_at(rational_index(m))
        z = f.at(m)
        if w.direction is Direction.LESS:
            ok = verify_lt(z, y, w.witness)
        else:
            ok = verify_lt(y, z, w.witness)
        if not ok:
            raise ValueError("apartness witness failed verification")
        if w.direction is Direction.LESS:
            return RationalInterval(m, hi)
        return RationalInterval(lo, m)

    x = CReal.from_steps(RationalInterval(_ZERO, _ONE), step)
    x.interval(depth)
    precision, bound = _certify_at_depth(f, x, y, depth, x_fuel=max(depth, 1), fuel=fuel)
    return IvtResult(x, precision, bound)


# Convenience oracle builders (the procedures re-verify whatever these claim).

def middle_third_oracle(f: ContinuousMap, y: CReal, fuel: int = DEFAULT_FUEL):
    """Searches a fixed grid of middle-third rationals for an apartness witness."""
    def oracle(a: Fraction, b: Fraction) -> tuple[Fraction, Apartness]:
        span = b - a
        for num in (4, 3, 5, 2, 6, 1, 7):  # eighths of the span, midpoint first
            q = a + span * Fraction(num, 8)
            w = try_apart(f.at(q), y, fuel)
            if w is not None:
                return q, w
        raise FuelExhausted("no apartness witness found in the middle third")
    return oracle


def enumerated_witnesses(f: ContinuousMap, y: CReal, fuel: int = DEFAULT_FUEL):
    """apart_at for ivt_countable_exceptions, searching each rational directly."""
    def apart_at(i: int) -> Apartness:
        q = rational_at(i)
        w = try_apart(f.at(q), y, fuel)
        if w is None:
            raise FuelExhausted(f"no apartness witness at rational index {i} (q = {q})")
        return w
    return apart_at
