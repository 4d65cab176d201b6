"""Finite field engine: arithmetic laws, Frobenius, subfields, determinism."""

import random

import pytest

from qbch.fields import FieldCtx, ZERO, field_for, is_prime, make_field, prime_power

SMALL_FIELDS = [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (11, 2), (2, 7)]


def elements(ctx):
    return [ZERO] + list(range(ctx.order - 1))


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_all_pairs(p, k):
    ctx = make_field(p, k)
    els = elements(ctx)
    one, zero = ctx.one, ctx.zero
    for a in els:
        assert ctx.add(a, zero) == a
        assert ctx.mul(a, one) == a
        assert ctx.add(a, ctx.neg(a)) == zero
        if a != ZERO:
            assert ctx.mul(a, ctx.inv(a)) == one
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_associativity_distributivity(p, k):
    ctx = make_field(p, k)
    els = elements(ctx)
    rng = random.Random(0)
    if len(els) <= 16:
        triples = [(a, b, c) for a in els for b in els for c in els]
    else:
        triples = [tuple(rng.choice(els) for _ in range(3)) for _ in range(10_000)]
    for a, b, c in triples:
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@pytest.mark.parametrize("p,k", [(2, 4), (3, 4), (5, 3), (7, 2), (11, 2), (2, 11), (3, 7)])
def test_frobenius_is_automorphism_fixing_prime_field(p, k):
    ctx = make_field(p, k)
    assert ctx.order <= 2500
    frob = lambda a: ctx.pow(a, p)
    prime_field = {ctx.embed_prime(u) for u in range(p)}
    els = elements(ctx)
    for a in els:
        assert (frob(a) == a) == (a in prime_field)
    if ctx.order <= 256:  # additivity over all pairs on the small fields
        for a in els:
            for b in els:
                if a > b:
                    continue
                assert frob(ctx.add(a, b)) == ctx.add(frob(a), frob(b))
                assert frob(ctx.mul(a, b)) == ctx.mul(frob(a), frob(b))


def test_nth_root_of_unity_order():
    ctx, _ = field_for(5, 31)
    n = 31
    root = ctx.nth_root_of_unity(n)
    for k in range(2 * n + 1):
        assert (ctx.pow(root, k) == ctx.one) == (k % n == 0)


def test_determinism():
    a = FieldCtx(3, 4)
    b = FieldCtx(3, 4)
    assert a.defining_poly == b.defining_poly
    assert a.zech_table == b.zech_table
    assert a.prime_logs == b.prime_logs


def test_subfield_is_a_field():
    ctx = make_field(2, 8)  # F_256 with F_4 and F_16 inside
    for q in (4, 16):
        sub = ctx.subfield_elements(q)
        assert len(sub) == q
        subset = set(sub)
        for a in sub:
            for b in sub:
                assert ctx.add(a, b) in subset
                assert ctx.mul(a, b) in subset
            if a != ZERO:
                assert ctx.inv(a) in subset


def test_field_for_picks_splitting_field():
    ctx, alpha = field_for(3, 13)  # ord_13(3) = 3 -> F_27
    assert ctx.order == 27
    assert ctx.element_order(alpha) == 13
    ctx2, alpha2 = field_for(25, 13)  # ord_13(25) = 2 -> F_625
    assert ctx2.order == 625
    assert ctx2.element_order(alpha2) == 13


def test_prime_power_and_is_prime():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)
    assert is_prime(1093) and not is_prime(1)


def test_smallest_primitive_poly_is_conway_like():
    # lexicographically smallest monic primitive polys, constant term first
    assert make_field(2, 4).defining_poly == (1, 1, 0, 0, 1)
    assert make_field(3, 2).defining_poly == (2, 1, 1)  # x^2 + x + 2
    assert make_field(5, 2).defining_poly == (2, 1, 1)


def test_max_order_guard():
    with pytest.raises(ValueError):
        FieldCtx(2, 30)
