"""Finite subbar extraction over binary sequences and two-move game solvers.

A decidable bar is a total boolean predicate on sequence codes.  The
extractor searches the binary tree up to a cutoff depth: a node is covered
when it is in the bar or both children are; a covered root yields the
minimal bar elements actually used, an uncovered root yields an explicit
counterexample path.  The bounded cutoff is essential: an unbounded
decidable bar has no computable depth bound in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .coding import encode


@dataclass(frozen=True)
class DecidableBar:
    """A pure, total membership test on binary-sequence codes plus a search cutoff."""

    member: Callable[[int], bool]
    max_depth: int


@dataclass(frozen=True)
class NotBarWithinDepth:
    """Leftmost path of length max_depth with no prefix in the bar."""

    path: tuple[int, ...]

    @property
    def code(self) -> int:
        return encode(list(self.path))


class _Uncovered(Exception):
    def __init__(self, path: list[int]):
        self.path = path


def finite_subbar(bar: DecidableBar) -> list[int] | NotBarWithinDepth:
    """Minimal bar elements covering every binary sequence of length max_depth.

    Depth-first, left branch first: an element of the bar stops the descent
    (so returned codes are pairwise incompatible, in lexicographic order),
    and the first uncovered full-length path aborts the search.
    """
    if bar.max_depth < 0:
        raise ValueError("max_depth must be a natural")
    member = bar.member

    def visit(path: list[int]) -> list[int]:
        code = encode(path)
        if member(code):
            return [code]
        if len(path) == bar.max_depth:
            raise _Uncovered(path)
        return visit(path + [0]) + visit(path + [1])

    try:
        return visit([])
    except _Uncovered as u:
        return NotBarWithinDepth(tuple(u.path))


@dataclass(frozen=True)
class GameSpecOmega2:
    """One move n by the first player, one reply i in {0,1}; the first player
    wins a play (n, i) when it belongs to C.  Moves at or beyond n_bound are
    out of consideration."""

    in_c: Callable[[int, int], bool]
    n_bound: int


@dataclass(frozen=True)
class WinningMove:
    """A first move n for which both replies stay in C."""

    move: int


@dataclass(frozen=True)
class CounterStrategyPrefix:
    """A reply per first move n < n_bound escaping C."""

    moves: tuple[int, ...]


def solve_omega2(g: GameSpecOmega2) -> WinningMove | CounterStrategyPrefix:
    """Backward-induction content at bounded support: either some move n has
    both (n,0) and (n,1) in C, or every n admits an escaping reply."""
    if g.n_bound < 0:
        raise ValueError("n_bound must be a natural")
    for n in range(g.n_bound):
        if g.in_c(n, 0) and g.in_c(n, 1):
            return WinningMove(n)
    return CounterStrategyPrefix(tuple(0 if not g.in_c(n, 0) else 1 for n in range(g.n_bound)))


@dataclass(frozen=True)
class GameSpec2Omega:
    """One move i in {0,1} by the first player, one reply n; i wins when (i, n) in C."""

    in_c: Callable[[int, int], bool]


def answer_strategy_2omega(g: GameSpec2Omega, p0: int, p1: int) -> int | None:
    """A winning first move against the announced reply pair, if one exists.

    Returns i with (i, p_i) in C, or None: the pair (p0, p1) wins against
    this check.
    """
    if g.in_c(0, p0):
        return 0
    if g.in_c(1, p1):
        return 1
    return None
