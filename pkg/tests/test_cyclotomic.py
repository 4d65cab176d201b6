"""Cyclotomic cosets, multiplicative orders, congruences, set transforms."""

from math import gcd

import pytest

from qbch.cyclotomic import (
    coset_of,
    cosets_disjoint,
    find_consecutive_coset,
    mult_order,
    negate_set,
    partition,
    scale_set,
    solve_linear_congruence,
)


def test_known_coset_values():
    assert set(coset_of(8, 5, 31).elems) == {8, 9, 14}
    assert set(coset_of(2, 7, 19).elems) == {2, 14, 3}
    assert set(coset_of(16, 7, 19).elems) == {5, 16, 17}
    assert set(coset_of(6, 25, 13).elems) == {6, 7}
    assert set(coset_of(4, 49, 144).elems) == {4, 52, 100}


def test_coset_rep_is_minimum_and_closed():
    for q, n in [(3, 26), (5, 31), (7, 24), (4, 17)]:
        for s in range(n):
            c = coset_of(s, q, n)
            assert c.rep == min(c.elems)
            assert {(z * q) % n for z in c.elems} == set(c.elems)
            assert s in c


def test_partition_covers_and_is_disjoint():
    for q, n in [(3, 11), (5, 31), (7, 19), (8, 73), (9, 80)]:
        part = partition(q, n)
        seen: set[int] = set()
        for c in part.cosets:
            assert not seen.intersection(c.elems)
            seen.update(c.elems)
        assert seen == set(range(n))
        assert part.m == mult_order(n, q)
        # listed in increasing rep order
        reps = [c.rep for c in part.cosets]
        assert reps == sorted(reps)


def test_mult_order():
    assert mult_order(31, 5) == 3
    assert mult_order(19, 7) == 3
    assert mult_order(17, 16) == 2
    assert mult_order(1093, 3) == 7
    with pytest.raises(ValueError):
        mult_order(9, 3)


def test_solve_linear_congruence_vs_brute_force():
    for n in range(2, 40):
        for a in range(n):
            for b in range(n):
                expect = [x for x in range(n) if (a * x - b) % n == 0]
                assert solve_linear_congruence(a, b, n) == expect


def test_consecutive_coset_lemma_small():
    for q in (3, 4, 5, 7, 8, 9):
        for n in range(q + 1, 120):
            if gcd(q, n) != 1 or gcd(q - 1, n) != 1:
                continue
            s = find_consecutive_coset(q, n)
            c = coset_of(s, q, n)
            assert s in c and (s + 1) % n in c
            assert (s * q) % n == (s + 1) % n  # s solves (q-1)x = 1 mod n


def test_consecutive_coset_rejects_bad_gcd():
    with pytest.raises(ValueError):
        find_consecutive_coset(3, 9)  # gcd(q, n) > 1
    with pytest.raises(ValueError):
        find_consecutive_coset(3, 8)  # gcd(q-1, n) > 1


def test_consecutive_coset_is_smallest_congruence_solution():
    # s is the least residue with s*q = s+1 (mod n), i.e. (q-1)s = 1 (mod n)
    for q, n in [(5, 31), (3, 11), (7, 19), (16, 17)]:
        s = find_consecutive_coset(q, n)
        candidates = [t for t in range(n) if (t * q) % n == (t + 1) % n]
        assert candidates and s == candidates[0]


def test_negate_and_scale_set():
    assert negate_set((1, 2, 3), 7) == (4, 5, 6)
    assert scale_set((1, 2, 3), -2, 7) == (1, 3, 5)
    assert scale_set(negate_set(range(7), 7), 1, 7) == tuple(range(7))


def test_cosets_disjoint_predicate():
    a = coset_of(1, 5, 31)
    b = coset_of(2, 5, 31)
    assert cosets_disjoint([a, b])
    assert not cosets_disjoint([a, coset_of(5, 5, 31)])  # 5 in C_1
