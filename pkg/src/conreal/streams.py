"""Total lazy memoized sequences of naturals, digit streams and fugitive predicates.

A ``NatStream`` is an infinite sequence of naturals backed by a pure, total
generator function; values are cached on first read.  A ``FugitiveSpec``
interprets a 0/1-ish stream as "the least index that fires": comparisons
against a bound n are decidable (read indices 0..n), existence in general
is not, which is exactly the point.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Sequence


class NatStream:
    """A total, lazily evaluated, memoized infinite sequence of naturals.

    The generator must be pure: repeated evaluation at the same index has to
    produce the same value (the cache makes the first answer authoritative,
    so an impure generator is undefined behavior).  Reads are thread-safe;
    cache writes are idempotent.
    """

    def __init__(self, generate: Callable[[int], int]):
        self._generate = generate
        self._cache: dict[int, int] = {}
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError("stream indices are naturals")
        with self._lock:
            if n in self._cache:
                return self._cache[n]
        # Compute outside the lock: generators may read other streams.
        value = self._generate(n)
        if value < 0:
            raise ValueError("stream produced a negative value")
        with self._lock:
            return self._cache.setdefault(n, value)

    def prefix(self, m: int) -> list[int]:
        """First m values as a list."""
        return [self[i] for i in range(m)]

    @classmethod
    def constant(cls, n: int) -> "NatStream":
        return cls(lambda _i: n)

    @classmethod
    def from_function(cls, fn: Callable[[int], int]) -> "NatStream":
        return cls(fn)

    @classmethod
    def eventually_constant(cls, prefix: Sequence[int], tail: int | None = None) -> "NatStream":
        """Stream listing ``prefix`` then repeating ``tail`` (default: last prefix value)."""
        values = list(prefix)
        if tail is None:
            if not values:
                raise ValueError("empty prefix needs an explicit tail value")
            tail = values[-1]
        rest: int = tail
        return cls(lambda i: values[i] if i < len(values) else rest)


def _pi_spigot():
    # Unbounded streaming spigot (lazy linear-fraction style); yields 3,1,4,1,5,...
    q, r, t, k, n, l = 1, 0, 1, 1, 3, 3
    while True:
        if 4 * q + r - t < n * t:
            yield n
            q, r, n, l = 10 * q, 10 * (r - n * t), (10 * (3 * q + r)) // t - 10 * n, l
        else:
            q, r, t, k, n, l = q * k, (2 * q + r) * l, t * l, k + 1, (q * (7 * k + 2) + r * l) // (t * l), l + 2


def pi_digits() -> NatStream:
    """Decimal digits of pi after the point: index 0 is 1, index 1 is 4, ...

    Backed by an unbounded spigot, so any index is reachable without fixing
    a precision up front.
    """
    gen = _pi_spigot()
    next(gen)  # drop the leading 3
    buf: list[int] = []
    lock = threading.Lock()

    def digit(n: int) -> int:
        with lock:
            while len(buf) <= n:
                buf.append(next(gen))
            return buf[n]

    return NatStream(digit)


@dataclass(frozen=True)
class FugitiveSpec:
    """A fugitive number: the least index j with ``indicator[j] != 0``, if any."""

    indicator: NatStream


class FugitiveCompare(enum.Enum):
    AT_MOST = "at_most"
    GREATER = "greater"


def pattern_indicator(digits: NatStream, digit: int, run_length: int) -> FugitiveSpec:
    """Fugitive spec firing at j when digits[j..j+run_length-1] all equal ``digit``."""
    if not 0 <= digit <= 9:
        raise ValueError("digit must be in 0..9")
    if run_length < 1:
        raise ValueError("run_length must be >= 1")

    def hit(j: int) -> int:
        return 1 if all(digits[j + i] == digit for i in range(run_length)) else 0

    return FugitiveSpec(NatStream(hit))


def fugitive_compare(f: FugitiveSpec, n: int) -> FugitiveCompare:
    """AT_MOST iff some j <= n fires; GREATER iff none does.  Reads indices 0..n only."""
    for j in range(n + 1):
        if f.indicator[j] != 0:
            return FugitiveCompare.AT_MOST
    return FugitiveCompare.GREATER


def fugitive_least(f: FugitiveSpec, n: int) -> int | None:
    """Least firing index among 0..n, or None if none fires there."""
    for j in range(n + 1):
        if f.indicator[j] != 0:
            return j
    return None


def fugitive_equal(f: FugitiveSpec, n: int) -> bool:
    """True iff n is the least firing index."""
    return f.indicator[n] != 0 and all(f.indicator[j] == 0 for j in range(n))
