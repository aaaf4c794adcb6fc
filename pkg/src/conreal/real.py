"""Constructive reals as shrinking, dwindling streams of rational intervals.

A real is an infinite sequence of nested rational intervals whose widths
fall below every 2^-m.  Arithmetic is componentwise interval arithmetic.
Order and apartness are *positive* relations: a comparison either produces
an index at which the two interval streams separate (a checkable witness)
or reports Unknown within the given fuel — never a proof of the negation.
Equality and <= are negative notions and deliberately get no decision
operation here.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .errors import FuelExhausted
from .streams import FugitiveSpec, NatStream, fugitive_least


class RationalInterval(NamedTuple):
    """A closed rational interval; point intervals (lo == hi) are legal."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi


def interval(lo, hi) -> RationalInterval:
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError(f"interval endpoints out of order: {lo} > {hi}")
    return RationalInterval(lo, hi)


def _point(q: Fraction) -> RationalInterval:
    return RationalInterval(q, q)


class CReal:
    """A constructive real: a memoized index -> RationalInterval stream.

    Library constructors guarantee the shrinking and dwindling invariants;
    a caller-supplied generator is trusted to do the same (approx raises
    FuelExhausted when a malformed real never narrows).
    """

    def __init__(self, generate: Callable[[int], RationalInterval]):
        self._generate = generate
        self._cache: dict[int, RationalInterval] = {}
        self._lock = threading.Lock()

    def interval(self, n: int) -> RationalInterval:
        if n < 0:
            raise IndexError("interval indices are naturals")
        with self._lock:
            if n in self._cache:
                return self._cache[n]
        iv = self._generate(n)
        with self._lock:
            return self._cache.setdefault(n, iv)

    def approx(self, p: int, fuel: int) -> RationalInterval:
        """First interval (scanning indices 0..fuel) of width <= 2^-p."""
        if fuel < 1:
            raise ValueError("fuel must be >= 1")
        bound = Fraction(1, 1 << p) if p >= 0 else Fraction(1 << -p)
        for n in range(fuel + 1):
            iv = self.interval(n)
            if iv.width <= bound:
                return iv
        raise FuelExhausted(f"no interval of width <= 2^-{p} within {fuel} indices")

    @classmethod
    def from_rational(cls, q) -> "CReal":
        q = Fraction(q)
        return cls(lambda n: RationalInterval(q - Fraction(1, 1 << n), q + Fraction(1, 1 << n)))

    @classmethod
    def from_steps(cls, first: RationalInterval,
                   step: Callable[[RationalInterval, int], RationalInterval]) -> "CReal":
        """Real built sequentially: interval 0 is ``first``, interval n+1 is step(interval n, n)."""
        built = [first]
        lock = threading.Lock()

        def gen(n: int) -> RationalInterval:
            with lock:
                while len(built) <= n:
                    built.append(step(built[-1], len(built) - 1))
                return built[n]

        return cls(gen)

    # Arithmetic: componentwise interval formulas.

    def __add__(self, other: "CReal") -> "CReal":
        def gen(n: int) -> RationalInterval:
            a, b = self.interval(n), other.interval(n)
            return RationalInterval(a.lo + b.lo, a.hi + b.hi)
        return CReal(gen)

    def __neg__(self) -> "CReal":
        def gen(n: int) -> RationalInterval:
            a = self.interval(n)
            return RationalInterval(-a.hi, -a.lo)
        return CReal(gen)

    def __sub__(self, other: "CReal") -> "CReal":
        return self + (-other)

    def __mul__(self, other: "CReal") -> "CReal":
        def gen(n: int) -> RationalInterval:
            a, b = self.interval(n), other.interval(n)
            products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
            return RationalInterval(min(products), max(products))
        return CReal(gen)

    def __abs__(self) -> "CReal":
        def gen(n: int) -> RationalInterval:
            a = self.interval(n)
            lo = max(Fraction(0), a.lo, -a.hi)
            hi = max(abs(a.lo), abs(a.hi))
            return RationalInterval(lo, hi)
        return CReal(gen)


def zero() -> CReal:
    return CReal.from_rational(0)


# Positive comparisons.

@dataclass(frozen=True)
class LtWitness:
    """An index at which the left stream's upper end lies below the right's lower end."""

    index: int


class Direction(enum.Enum):
    LESS = "less"        # first argument < second
    GREATER = "greater"  # second argument < first


@dataclass(frozen=True)
class Apartness:
    direction: Direction
    witness: LtWitness


def verify_lt(x: CReal, y: CReal, w: LtWitness) -> bool:
    """Check a witness against the raw intervals."""
    return x.interval(w.index).hi < y.interval(w.index).lo


def try_lt(x: CReal, y: CReal, fuel: int) -> LtWitness | None:
    """Scan indices 0..fuel for a proof of x < y; None means unknown, not refuted."""
    for n in range(fuel + 1):
        if x.interval(n).hi < y.interval(n).lo:
            return LtWitness(n)
    return None


def try_apart(x: CReal, y: CReal, fuel: int) -> Apartness | None:
    """Scan indices 0..fuel for a proof of x < y or y < x."""
    for n in range(fuel + 1):
        a, b = x.interval(n), y.interval(n)
        if a.hi < b.lo:
            return Apartness(Direction.LESS, LtWitness(n))
        if b.hi < a.lo:
            return Apartness(Direction.GREATER, LtWitness(n))
    return None


class SplitSide(enum.Enum):
    LEFT_IS_LESS = "left_is_less"    # x < z
    RIGHT_IS_LESS = "right_is_less"  # z < y


@dataclass(frozen=True)
class Split:
    side: SplitSide
    witness: LtWitness


def cotrans_split(x: CReal, y: CReal, w: LtWitness, z: CReal) -> Split:
    """Given a witness of x < y, decide x < z or z < y.  Total: no fuel needed.

    Scans z from the witness index until z's interval is narrower than the
    witnessed gap; dwindling guarantees termination.  The returned witness
    certifies the chosen side at the reached index.
    """
    n0 = w.index
    x_hi = x.interval(n0).hi
    y_lo = y.interval(n0).lo
    if not x_hi < y_lo:
        raise ValueError("supplied witness does not certify x < y")
    gap = y_lo - x_hi
    n = n0
    while z.interval(n).width >= gap:
        n += 1
    if x_hi < z.interval(n).lo:
        return Split(SplitSide.LEFT_IS_LESS, LtWitness(n))
    return Split(SplitSide.RIGHT_IS_LESS, LtWitness(n))


def diagonal(xs: Callable[[int], CReal],
             step_budget: Callable[[int], int] | None = None) -> CReal:
    """A real in (0, 1) apart from every real in the sequence.

    Starts from (0, 1); at step n the real of index n is inspected at its
    first interval narrower than 3^-(n+1) and the construction takes the
    lower or upper third of its current interval, whichever avoids it.
    Widths are exactly 3^-n.  The per-step inspection budget defaults to
    4*(n+2) indices; a real that never narrows that far is malformed and
    raises instead of hanging.
    """
    def step(prev: RationalInterval, n: int) -> RationalInterval:
        lo, hi = prev
        one_third = (2 * lo + hi) / 3
        two_thirds = (lo + 2 * hi) / 3
        target = Fraction(1, 3 ** (n + 1))
        xn = xs(n)
        budget = 4 * (n + 2) if step_budget is None else step_budget(n)
        for m in range(budget + 1):
            iv = xn.interval(m)
            if iv.width < target:
                break
        else:
            raise FuelExhausted(
                f"input real {n} did not dwindle below 3^-{n + 1} within {budget} indices")
        if one_third < iv.lo:
            return RationalInterval(lo, one_third)
        return RationalInterval(two_thirds, hi)

    return CReal.from_steps(RationalInterval(Fraction(0), Fraction(1)), step)


def sqrt2() -> CReal:
    """The square root of 2 by dyadic bisection of q^2 - 2 on [1, 2]; width 2^-n."""
    def step(prev: RationalInterval, _n: int) -> RationalInterval:
        lo, hi = prev
        mid = (lo + hi) / 2
        if mid * mid <= 2:
            return RationalInterval(mid, hi)
        return RationalInterval(lo, mid)

    return CReal.from_steps(RationalInterval(Fraction(1), Fraction(2)), step)


def sqrt2_irrationality_witness(m: int, n: int) -> int:
    """A positive p with |sqrt(2) - m/n| >= 1/p: 2 if m/n > 2, else 4*n^2."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if Fraction(m, n) > 2:
        return 2
    return 4 * n * n


# Oscillating reals driven by a fugitive number.

def rho0(f: FugitiveSpec) -> CReal:
    """Oscillates above zero: (-2^-n, 2^-n) before the fugitive k, then pinned to 2^-k."""
    def gen(n: int) -> RationalInterval:
        k = fugitive_least(f, n)
        if k is None:
            h = Fraction(1, 1 << n)
            return RationalInterval(-h, h)
        return _point(Fraction(1, 1 << k))
    return CReal(gen)


def rho1(f: FugitiveSpec) -> CReal:
    """Oscillates around zero: pinned to +2^-k for even k, -2^-k for odd k."""
    def gen(n: int) -> RationalInterval:
        k = fugitive_least(f, n)
        if k is None:
            h = Fraction(1, 1 << n)
            return RationalInterval(-h, h)
        v = Fraction(1, 1 << k)
        return _point(v if k % 2 == 0 else -v)
    return CReal(gen)


def rho2(f: FugitiveSpec) -> CReal:
    """Oscillates between zero and twice rho0: the sum rho0 + rho1."""
    return rho0(f) + rho1(f)


def cantor_point(bits: NatStream) -> CReal:
    """Embed a binary stream into [0, 1] by the two-thirds interval recursion.

    Interval 0 is (0, 1); bit 0 keeps the lower two thirds, bit 1 the upper
    two thirds, so interval n has width (2/3)^n.  Reads with value >= 2 are
    rejected.
    """
    def step(prev: RationalInterval, n: int) -> RationalInterval:
        b = bits[n]
        if b >= 2:
            raise ValueError(f"cantor_point needs binary values, got {b} at index {n}")
        lo, hi = prev
        if b == 0:
            return RationalInterval(lo, (lo + 2 * hi) / 3)
        return RationalInterval((2 * lo + hi) / 3, hi)

    return CReal.from_steps(RationalInterval(Fraction(0), Fraction(1)), step)
