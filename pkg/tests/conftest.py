"""Shared test oracles and generators.

The pi oracle is an independent fixed-precision Machin computation (the
library stream uses an unbounded spigot, so the two methods cross-check).
The expression-tree generator produces random constructive reals together
with exact dwindling-rate and magnitude bounds derived from the tree shape.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conreal import CReal, FugitiveSpec, NatStream, rho0, rho1, sqrt2


def machin_pi_digits(n: int) -> list[int]:
    """First n decimal digits of pi after the point, by Machin's formula."""
    scale = 10 ** (n + 10)

    def atan_inv(x: int) -> int:
        total, term, k = 0, scale // x, 0
        while term:
            total += term if k % 2 == 0 else -term
            k += 1
            term = scale // (x ** (2 * k + 1)) // (2 * k + 1)
        return total

    pi = 16 * atan_inv(5) - 4 * atan_inv(239)
    return [int(c) for c in str(pi)[1:n + 1]]


@pytest.fixture(scope="session")
def pi_oracle_120() -> list[int]:
    return machin_pi_digits(120)


def random_indicator(rng: random.Random) -> FugitiveSpec:
    """Indicator with a random 0/1 prefix and a constant tail (may never fire)."""
    prefix = [rng.randint(0, 1) if rng.random() < 0.4 else 0 for _ in range(rng.randint(1, 12))]
    tail = rng.choice([0, 1])
    return FugitiveSpec(NatStream.eventually_constant(prefix, tail))


def random_real_tree(rng: random.Random, depth: int) -> tuple[CReal, Fraction, Fraction]:
    """A random expression tree; returns (real, rate, magnitude).

    ``rate`` bounds the width at index n by rate * 2^-n, ``magnitude``
    bounds both endpoints of every interval in absolute value.
    """
    if depth == 0 or rng.random() < 0.3:
        kind = rng.choice(["rational", "rational", "rho0", "rho1", "sqrt2"])
        if kind == "rational":
            q = Fraction(rng.randint(-16, 16), rng.randint(1, 16))
            return CReal.from_rational(q), Fraction(2), abs(q) + 1
        if kind == "rho0":
            return rho0(random_indicator(rng)), Fraction(2), Fraction(1)
        if kind == "rho1":
            return rho1(random_indicator(rng)), Fraction(2), Fraction(1)
        return sqrt2(), Fraction(1), Fraction(2)
    op = rng.choice(["add", "sub", "mul", "abs"])
    x, cx, mx = random_real_tree(rng, depth - 1)
    if op == "abs":
        return abs(x), cx, mx
    y, cy, my = random_real_tree(rng, depth - 1)
    if op == "add":
        return x + y, cx + cy, mx + my
    if op == "sub":
        return x - y, cx + cy, mx + my
    return x * y, mx * cy + my * cx, mx * my


def fuel_for(rate: Fraction, p: int) -> int:
    """Fuel making approx at precision p safe for a real of the given rate."""
    extra = 0
    scaled = Fraction(1)
    while scaled < rate:
        scaled *= 2
        extra += 1
    return p + extra + 1
