import itertools
import math
import random

import pytest

from conreal import (Coloring, DicksonInstance, NatStream, TooLarge,
                     almost_full_witness, arrow_check, arrow_star_check,
                     dickson_witness, encode, euclid_extend,
                     monochromatic_witness)


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_euclid_examples():
    assert euclid_extend([2, 3, 5]) == 31
    assert euclid_extend([2, 3, 5, 7, 11, 13]) == 59  # 30031 = 59 * 509
    assert euclid_extend([2]) == 3


def test_euclid_rejects_composites():
    with pytest.raises(ValueError):
        euclid_extend([2, 4])
    with pytest.raises(ValueError):
        euclid_extend([])


def test_euclid_output_is_new_prime():
    rng = random.Random(13)
    primes = [p for p in range(2, 200) if _is_prime(p)]
    for _ in range(25):
        qs = rng.sample(primes, rng.randint(1, 6))
        q = euclid_extend(qs)
        assert _is_prime(q)
        assert all(math.gcd(q, given) == 1 for given in qs)
        assert q not in qs


def _streams(*lists):
    return tuple(NatStream.eventually_constant(v) for v in lists)


def test_dickson_examples():
    inst = DicksonInstance(_streams([3, 2, 1, 0, 0]))
    assert dickson_witness(inst, 16) == (3, 4)
    inst = DicksonInstance(_streams([0, 1, 2, 3], [0, 1, 2, 3]))
    assert dickson_witness(inst, 16) == (0, 1)
    inst = DicksonInstance(_streams([1, 0, 1, 0, 1], [0, 1, 0, 1, 0]))
    assert dickson_witness(inst, 16) == (0, 2)


def test_dickson_validation():
    with pytest.raises(ValueError):
        DicksonInstance(())
    with pytest.raises(ValueError):
        dickson_witness(DicksonInstance(_streams([0])), 1)


def _dickson_oracle(lists, fuel):
    # Independent scan over explicit lists in the documented order.
    def value(seq, i):
        return seq[i] if i < len(seq) else seq[-1]
    for j in range(1, fuel):
        for i in range(j):
            if all(value(seq, i) <= value(seq, j) for seq in lists):
                return i, j
    return None


def test_dickson_against_oracle():
    rng = random.Random(29)
    for _ in range(60):
        p = rng.randint(1, 3)
        lists = [[rng.randint(0, 10) for _ in range(rng.randint(1, 8))] for _ in range(p)]
        inst = DicksonInstance(_streams(*lists))
        found = dickson_witness(inst, 24)
        assert found == _dickson_oracle(lists, 24)
        assert found is not None  # guaranteed well inside this fuel
        i, j = found
        assert i < j
        assert all(s[i] <= s[j] for s in inst.sequences)


def test_arrow_boundary():
    assert arrow_check(6, 3, 2, 2) is True
    assert arrow_check(5, 3, 2, 2) is False


def test_arrow_one_color():
    for n in range(1, 5):
        assert arrow_check(n, n, min(n, 2), 1) is True


def test_arrow_validation_and_guard():
    with pytest.raises(ValueError):
        arrow_check(3, 4, 2, 2)
    with pytest.raises(TooLarge):
        arrow_check(20, 3, 2, 2)


def _pentagon_coloring():
    # Edges of the 5-cycle get color 0, diagonals color 1: no mono triangle.
    def assign(t):
        a, b = t
        return 0 if (b - a) % 5 in (1, 4) else 1
    return Coloring(2, 2, assign)


def test_monochromatic_witness_examples():
    constant = Coloring(2, 2, lambda t: 0)
    assert monochromatic_witness(constant, 5, 3) == ((0, 1, 2), 0)
    assert monochromatic_witness(_pentagon_coloring(), 5, 3) is None


def test_k6_always_has_mono_triangle():
    rng = random.Random(37)
    for _ in range(30):
        table = {t: rng.randint(0, 1) for t in itertools.combinations(range(6), 2)}
        c = Coloring(2, 2, lambda t, tab=table: tab[t])
        found = monochromatic_witness(c, 6, 3)
        assert found is not None
        t, color = found
        assert all(table[u] == color for u in itertools.combinations(t, 2))


def _arrow_star_oracle(M, n, k, r):
    """Independent per-coloring check using tuple colorings and direct search."""
    slots = list(itertools.combinations(range(M), k))
    for colors in itertools.product(range(r), repeat=len(slots)):
        table = dict(zip(slots, colors))
        ok = False
        for p in range(n, M):
            for rest in itertools.combinations(range(p + 1, M), p - 1):
                t = (p,) + rest
                shades = {table[u] for u in itertools.combinations(t, k)}
                if len(shades) <= 1:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def test_arrow_star_smallest_for_one():
    # The least M with the relatively-large property at (n, k, r) = (1, 1, 2),
    # computed by the independent oracle, is 2.
    verdicts = [_arrow_star_oracle(M, 1, 1, 2) for M in range(1, 5)]
    assert verdicts == [False, True, True, True]
    assert [arrow_star_check(M, 1, 1, 2) for M in range(1, 5)] == verdicts


def test_arrow_star_direct_instance():
    assert arrow_star_check(3, 1, 1, 1) is True
    assert _arrow_star_oracle(3, 1, 1, 1) is True


def test_arrow_star_monotone_in_M():
    for n, k, r in [(1, 1, 2), (2, 1, 2), (2, 2, 2)]:
        held = False
        for M in range(k, 7):
            if n > M:
                continue
            holds = arrow_star_check(M, n, k, r)
            if held:
                assert holds
            held = held or holds


def test_almost_full_examples():
    identity = NatStream.from_function(lambda n: n)
    found = almost_full_witness(lambda code: len_of(code) >= 1, identity, 3)
    assert found == (0,)
    evens = NatStream.from_function(lambda n: 2 * n)
    found = almost_full_witness(_pair_first_even, evens, 4)
    assert found == (0, 1)
    assert almost_full_witness(lambda code: False, identity, 4) is None


def len_of(code):
    from conreal import decode
    return len(decode(code))


def _pair_first_even(code):
    from conreal import decode
    values = decode(code)
    return len(values) == 2 and values[0] % 2 == 0


def test_almost_full_requires_increasing():
    decreasing = NatStream.from_function(lambda n: 10 - n if n < 10 else n)
    with pytest.raises(ValueError):
        almost_full_witness(lambda code: True, decreasing, 5)


def test_almost_full_found_reverifies():
    rng = random.Random(41)
    member_table = {}

    def member(code):
        if code not in member_table:
            member_table[code] = rng.random() < 0.1
        return member_table[code]

    zeta = NatStream.from_function(lambda n: 3 * n + 1)
    found = almost_full_witness(member, zeta, 6)
    if found is not None:
        assert member(encode([zeta[i] for i in found]))


def test_arrow_monotone_in_M():
    # Once the plain arrow relation holds it keeps holding as M grows.
    for n, k, r in [(2, 1, 2), (2, 2, 2), (3, 2, 2)]:
        held = False
        for M in range(n, 7):
            holds = arrow_check(M, n, k, r)
            if held:
                assert holds
            held = held or holds


def test_monochromatic_witness_matches_counterexample_status():
    # NotFound exactly characterizes counterexample colorings: cross-check
    # against a direct search over all n-subsets.
    rng = random.Random(53)
    M, n, k = 5, 3, 2
    for _ in range(60):
        table = {t: rng.randint(0, 1) for t in itertools.combinations(range(M), k)}
        c = Coloring(2, k, lambda t, tab=table: tab[t])
        found = monochromatic_witness(c, M, n)
        brute = any(
            len({table[u] for u in itertools.combinations(t, k)}) == 1
            for t in itertools.combinations(range(M), n)
        )
        assert (found is not None) == brute
