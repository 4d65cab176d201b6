"""Polynomials over F_q, minimal polynomials, BCH codes and their duals."""

import pytest

from qbch.cyclic_codes import (
    Poly,
    ZeroCodeError,
    bch_designed_distance,
    build_code,
    build_code_complement,
    code_contains,
    code_from_residues,
    defining_set,
    dual_defining_set,
    is_euclidean_dual_containing,
    is_hermitian_dual_containing,
    minimal_polynomial,
    poly,
    poly_one,
    x_pow_n_minus_1,
)
from qbch.cyclotomic import Coset, coset_of, partition
from qbch.fields import ZERO, field_for, make_field


def test_poly_ring_basics():
    ctx = make_field(3, 1)
    f = poly(ctx, [ctx.embed_prime(1), ctx.embed_prime(2), ctx.embed_prime(1)])
    g = poly(ctx, [ctx.embed_prime(1), ctx.embed_prime(1)])
    quot, rem = f.divmod(g)
    assert (quot * g + rem).coeffs == f.coeffs
    assert g.divides(f) == rem.is_zero
    assert (f - f).is_zero
    assert f.monic().coeffs[-1] == ctx.one


def test_minimal_polynomial_product_is_x_n_minus_1():
    for q, n in [(3, 11), (3, 13), (5, 31), (7, 19), (4, 17)]:
        ctx, alpha = field_for(q, n)
        prod = poly_one(ctx)
        for c in partition(q, n).cosets:
            m = minimal_polynomial(ctx, alpha, c, q)
            assert m.degree == len(c)
            prod = prod * m
        assert prod.coeffs == x_pow_n_minus_1(ctx, n).coeffs


def test_minimal_polynomial_rejects_partial_coset():
    ctx, alpha = field_for(3, 11)
    full = coset_of(1, 3, 11)
    broken = Coset(rep=1, elems=full.elems[:2], q=3, n=11)
    with pytest.raises(ArithmeticError):
        minimal_polynomial(ctx, alpha, broken, 3)


def test_defining_set_requires_q_closure():
    ds = defining_set(3, 11, [1, 3, 9, 5, 4])
    assert ds.coset_reps == (1,)
    with pytest.raises(ValueError):
        from qbch.cyclic_codes import DefiningSet
        DefiningSet(n=11, q=3, residues=(1, 2), coset_reps=(1,))


def test_bch_designed_distance():
    assert bch_designed_distance([], 15) == (1, 0)
    assert bch_designed_distance([3, 4, 5], 15) == (4, 3)
    # wrap-around run 14, 0, 1
    assert bch_designed_distance([14, 0, 1, 7], 15) == (4, 14)
    # pattern r..2r-2 gives delta = r
    for r in (3, 5, 8):
        assert bch_designed_distance(range(r, 2 * r - 1), 100)[0] == r
    with pytest.raises(ZeroCodeError):
        bch_designed_distance(range(7), 7)


def test_dual_defining_set_is_an_involution():
    for q, n in [(3, 13), (5, 31), (4, 17)]:
        for c in partition(q, n).cosets:
            ds = defining_set(q, n, c.elems)
            assert dual_defining_set(dual_defining_set(ds)).residues == ds.residues


def test_dual_containment_predicates():
    # C_8 = {8, 9, 14} mod 31 over F_5: -Z = {23, 22, 17}, disjoint
    ds = defining_set(5, 31, coset_of(8, 5, 31).elems)
    assert is_euclidean_dual_containing(ds)
    # symmetric set is never Euclidean dual-containing
    ds2 = defining_set(5, 31, list(coset_of(8, 5, 31).elems) + [23, 22, 17])
    assert not is_euclidean_dual_containing(ds2)
    # Hermitian: C_6 = {6, 7} mod 13 over F_25, -5*Z = {9, 4}, disjoint
    dsh = defining_set(25, 13, [6, 7])
    assert is_hermitian_dual_containing(dsh, 5)
    with pytest.raises(ValueError):
        is_hermitian_dual_containing(dsh, 4)


def test_build_code_and_complement_agree():
    q, n = 5, 31
    part = partition(q, n).cosets
    chosen = [part[1], part[3]]
    rest = [c for c in part if c not in chosen]
    direct = build_code(q, n, chosen)
    via_complement = build_code_complement(q, n, rest)
    assert direct.g.coeffs == via_complement.g.coeffs
    assert direct.zset.residues == via_complement.zset.residues
    assert direct.k == n - len(direct.zset.residues)


def test_code_membership_and_nesting():
    c1 = code_from_residues(3, 11, coset_of(1, 3, 11).elems)
    z2 = list(c1.zset.residues) + [0]
    c2 = code_from_residues(3, 11, z2)
    assert code_contains(c1, c2)
    assert not code_contains(c2, c1)
    assert c1.contains_word(c1.g)
    assert c1.contains_word(c2.g)
    assert not c2.contains_word(c1.g)
    one = poly_one(c1.ctx)
    assert not c1.contains_word(one)


def test_generator_divides_x_n_minus_1():
    for q, n in [(3, 11), (5, 31), (8, 73)]:
        code = code_from_residues(q, n, coset_of(1, q, n).elems)
        assert x_pow_n_minus_1(code.ctx, n).divmod(code.g)[1].is_zero
        assert code.g.in_subfield(q)


def test_reciprocal():
    ctx = make_field(2, 1)
    f = poly(ctx, [ctx.one, ZERO, ZERO, ctx.one])  # 1 + x^3
    assert f.reciprocal().coeffs == f.coeffs
    g = poly(ctx, [ZERO, ctx.one, ctx.one])  # x + x^2
    assert g.reciprocal().degree == 1
