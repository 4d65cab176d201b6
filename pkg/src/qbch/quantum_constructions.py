"""CSS, Steane-enlargement and Hermitian quantum code parameter calculus.

Every construction hypothesis (coset disjointness, subset relations, dual
containment) is re-verified computationally before parameters are
emitted, and each family generator cross-checks its closed-form
dimension against the dimensions of the classical codes it built.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd, isqrt
from typing import Optional, Sequence

from .cyclic_codes import (
    CyclicCode,
    bch_designed_distance,
    build_code,
    build_code_complement,
    code_contains,
    is_euclidean_dual_containing,
    is_hermitian_dual_containing,
)
from .cyclotomic import Coset, coset_of, cosets_disjoint, find_consecutive_coset, mult_order
from .fields import is_prime, prime_power


class ConstructionError(ValueError):
    """A construction hypothesis failed; the message names it."""


@dataclass(frozen=True)
class QuantumParams:
    """Parameters [[n, K, d >= d_lower]]_q with provenance.

    d_exact is set only by the distance oracle; mds only with d_exact.
    ``codes`` keeps the classical codes behind the construction for
    later verification and is not part of the serialized record.
    """

    n: int
    k: int
    d_lower: int
    q: int
    family: str
    d_exact: Optional[int] = None
    mds: bool = False
    provenance: dict = field(default_factory=dict)
    codes: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError("dimension out of range")
        if self.d_lower < 1:
            raise ValueError("distance lower bound must be >= 1")

    def with_exact_distance(self, d_exact: int) -> "QuantumParams":
        out = replace(self, d_exact=d_exact)
        check = singleton_check(out)
        return replace(out, mds=check.mds)


@dataclass(frozen=True)
class SingletonResult:
    slack: int  # n + 2 - K - 2d
    mds: bool


def singleton_check(p: QuantumParams) -> SingletonResult:
    """Quantum Singleton bound K + 2d <= n + 2, using d_exact when set."""
    d = p.d_exact if p.d_exact is not None else p.d_lower
    slack = p.n + 2 - p.k - 2 * d
    if slack < 0 and p.d_exact is not None:
        raise AssertionError(
            f"Singleton bound violated with exact distance: [[{p.n}, {p.k}, {d}]]"
        )
    return SingletonResult(slack=slack, mds=(slack == 0 and p.d_exact is not None))


def _require(cond: bool, hypothesis: str) -> None:
    if not cond:
        raise ConstructionError(hypothesis)


def _check_double_entry(params: QuantumParams, expected_k: int) -> None:
    if params.k != expected_k:
        raise AssertionError(
            f"dimension double-entry failed: computed K={params.k}, "
            f"closed form gives {expected_k}"
        )


# -- the three composition rules ------------------------------------------


def css(c1: CyclicCode, c2: CyclicCode) -> QuantumParams:
    """CSS pair C2 < C1 -> [[n, k1 - k2, d]]_q.

    d_lower = min of the designed distance of C1 and of the code
    generated by h2 = (x^n - 1)/g2, which is equivalent to C2^perp.
    """
    _require(code_contains(c1, c2), "C2 is not a subcode of C1")
    _require(c1.k > c2.k, "C2 = C1 gives a dimension-zero quantum code")
    n, q = c1.n, c1.q
    h2_residues = sorted(set(range(n)) - set(c2.zset.residues))
    delta_h2, _ = bch_designed_distance(h2_residues, n)
    return QuantumParams(
        n=n,
        k=c1.k - c2.k,
        d_lower=min(c1.delta, delta_h2),
        q=q,
        family="manual",
        provenance={
            "rule": "css",
            "c1": list(c1.params),
            "c2": list(c2.params),
            "defining_set_c1": list(c1.zset.residues),
            "defining_set_c2": list(c2.zset.residues),
        },
        codes={"c1": c1, "c2": c2},
    )


def steane_enlarge(L: CyclicCode, L2: CyclicCode) -> QuantumParams:
    """Steane enlargement of a Euclidean dual-containing code L to L2.

    [[n, k + k' - n, d >= min(delta(L), ceil((q+1)/q * delta(L2)))]]_q.
    """
    _require(is_euclidean_dual_containing(L.zset), "L is not Euclidean dual-containing")
    _require(code_contains(L2, L), "L is not a subcode of the enlargement L2")
    _require(L2.k >= L.k + 2, f"enlargement gap {L2.k - L.k} < 2")
    n, q = L.n, L.q
    d_enl = -(-(q + 1) * L2.delta // q)  # ceil((q+1)/q * delta')
    k = L.k + L2.k - n
    _require(k > 0, "enlargement yields non-positive dimension")
    return QuantumParams(
        n=n,
        k=k,
        d_lower=min(L.delta, d_enl),
        q=q,
        family="manual",
        provenance={
            "rule": "steane",
            "L": list(L.params),
            "L2": list(L2.params),
            "defining_set_c1": list(L.zset.residues),
            "defining_set_c2": list(L2.zset.residues),
        },
        codes={"L": L, "L2": L2},
    )


def hermitian(c: CyclicCode) -> QuantumParams:
    """Hermitian construction: dual-containing [n, k, d]_{q^2} -> [[n, 2k-n, >=d]]_q."""
    q = isqrt(c.q)
    _require(q * q == c.q, f"code alphabet {c.q} is not a square")
    _require(
        is_hermitian_dual_containing(c.zset, q),
        "C is not Hermitian dual-containing",
    )
    k = 2 * c.k - c.n
    _require(k >= 0, "Hermitian construction yields negative dimension")
    return QuantumParams(
        n=c.n,
        k=k,
        d_lower=c.delta,
        q=q,
        family="manual",
        provenance={
            "rule": "hermitian",
            "C": list(c.params),
            "defining_set_c1": list(c.zset.residues),
        },
        codes={"C": c},
    )


# -- the four named families ----------------------------------------------


def construct_css_I(q: int, n: int, c: int) -> QuantumParams:
    """CSS family for (q-1) | n and ord_n(q) = 2: [[n, n-4(c-2)-2, d>=c]]_q.

    C1 uses cosets 0..c-2; C2 is the complement of cosets r..r+c-2 where
    n = r(q-1).  Valid for 2 <= c <= r.
    """
    _require(q > 3, f"q = {q} <= 3")
    _require(gcd(q, n) == 1, f"gcd({q}, {n}) != 1")
    _require(n % (q - 1) == 0, f"(q - 1) = {q - 1} does not divide n = {n}")
    _require(mult_order(n, q) == 2, f"ord_{n}({q}) != 2")
    r = n // (q - 1)
    _require(2 <= c <= r, f"c = {c} outside [2, r = {r}]")
    cosets1 = [coset_of(i, q, n) for i in range(c - 1)]
    excluded = [coset_of(r + i, q, n) for i in range(c - 1)]
    _require(cosets_disjoint(cosets1 + excluded), "construction cosets are not disjoint")
    z1_size = sum(len(cs) for cs in cosets1)
    _require(z1_size == 2 * (c - 2) + 1, f"|Z1| = {z1_size} != 2(c-2)+1")
    c1 = build_code(q, n, cosets1)
    c2 = build_code_complement(q, n, excluded)
    params = css(c1, c2)
    _check_double_entry(params, n - 4 * (c - 2) - 2)
    if params.d_lower < c:
        raise AssertionError(f"designed distance {params.d_lower} below claim {c}")
    prov = dict(params.provenance, q=q, n=n, c=c, r=r)
    return replace(params, family="CSS-I", provenance=prov)


def _spread_offsets(r: int) -> list[int]:
    """Coset index offsets s, s+2, ..., s+r (just s when r = 1)."""
    return [0] + list(range(2, r + 1))


def construct_css_II(q: int, n: int, r: int, s: Optional[int] = None) -> QuantumParams:
    """Prime-length CSS family: [[n, n-2mr, d >= r+2]]_q.

    Uses the coset containing two consecutive integers; C1 is built on
    cosets s, s+2, ..., s+r and C2 excludes their negatives.  r = 1
    means C1 is the code of the single coset C_s (d >= 3).
    """
    _require(is_prime(n), f"n = {n} is not prime")
    _require(n > q, f"n = {n} <= q = {q}")
    _require(gcd(q, n) == 1, f"gcd({q}, {n}) != 1")
    m = mult_order(n, q)
    _require(m >= 2, f"ord_{n}({q}) = {m} < 2")
    _require(r >= 1, f"r = {r} < 1")
    if s is None:
        s = find_consecutive_coset(q, n)
    cs = coset_of(s, q, n)
    _require(s % n in cs and (s + 1) % n in cs, f"coset of {s} lacks {s}, {s + 1}")
    offsets = _spread_offsets(r)
    cosets1 = [coset_of(s + o, q, n) for o in offsets]
    excluded = [coset_of(-s - o, q, n) for o in offsets]
    _require(
        cosets_disjoint(cosets1 + excluded),
        "the 2r construction cosets are not mutually disjoint",
    )
    c1 = build_code(q, n, cosets1)
    c2 = build_code_complement(q, n, excluded)
    params = css(c1, c2)
    _check_double_entry(params, n - 2 * m * r)
    if params.d_lower < r + 2:
        raise AssertionError(f"designed distance {params.d_lower} below claim {r + 2}")
    prov = dict(params.provenance, q=q, n=n, s=s, r=r, m=m)
    return replace(params, family="CSS-II", provenance=prov)


def construct_steane_III(q: int, n: int, r: int, s: Optional[int] = None) -> QuantumParams:
    """Prime-length Steane family: [[n, n-m(2r-1), d >= r+2]]_q, r >= 2.

    L uses cosets s, s+2, ..., s+r; the enlargement drops the last one.
    The smallest case r = 2 gives [[n, n-3m, d >= 4]]_q.
    """
    _require(is_prime(n), f"n = {n} is not prime")
    _require(n > q, f"n = {n} <= q = {q}")
    m = mult_order(n, q)
    _require(m >= 2, f"ord_{n}({q}) = {m} < 2")
    _require(r >= 2, f"r = {r} < 2 (enlargement needs at least two cosets)")
    if s is None:
        s = find_consecutive_coset(q, n)
    cs = coset_of(s, q, n)
    _require(s % n in cs and (s + 1) % n in cs, f"coset of {s} lacks {s}, {s + 1}")
    cosets = [coset_of(s + o, q, n) for o in _spread_offsets(r)]
    _require(cosets_disjoint(cosets), "construction cosets are not mutually disjoint")
    L = build_code(q, n, cosets)
    _require(
        is_euclidean_dual_containing(L.zset),
        "Z intersects -Z: L is not Euclidean dual-containing",
    )
    _require(L.k == n - m * r, f"dim L = {L.k} != n - mr")
    L2 = build_code(q, n, cosets[:-1])
    params = steane_enlarge(L, L2)
    _check_double_entry(params, n - m * (2 * r - 1))
    if params.d_lower < r + 2:
        raise AssertionError(f"designed distance {params.d_lower} below claim {r + 2}")
    prov = dict(params.provenance, q=q, n=n, s=s, r=r, m=m)
    return replace(params, family="Steane-III", provenance=prov)


def construct_steane_nonprime(q: int, n: int, c: int) -> QuantumParams:
    """Steane family for (q-1) | n, ord_n(q) = 2: [[n, n-4c, d >= c+2]]_q.

    L uses cosets r..r+c and the enlargement drops C_{r+c}, with
    n = r(q-1), r > 3 and 1 <= c <= r-3.
    """
    _require(q >= 5, f"q = {q} < 5")
    _require(gcd(q, n) == 1, f"gcd({q}, {n}) != 1")
    _require(n % (q - 1) == 0, f"(q - 1) = {q - 1} does not divide n = {n}")
    _require(mult_order(n, q) == 2, f"ord_{n}({q}) != 2")
    r = n // (q - 1)
    _require(r > 3, f"r = {r} <= 3")
    _require(1 <= c <= r - 3, f"c = {c} outside [1, r - 3 = {r - 3}]")
    cosets = [coset_of(r + i, q, n) for i in range(c + 1)]
    _require(cosets_disjoint(cosets), "construction cosets are not mutually disjoint")
    L = build_code(q, n, cosets)
    _require(
        is_euclidean_dual_containing(L.zset),
        "Z intersects -Z: L is not Euclidean dual-containing",
    )
    L2 = build_code(q, n, cosets[:-1])
    params = steane_enlarge(L, L2)
    _check_double_entry(params, n - 4 * c)
    if params.d_lower < c + 2:
        raise AssertionError(f"designed distance {params.d_lower} below claim {c + 2}")
    prov = dict(params.provenance, q=q, n=n, c=c, r=r)
    return replace(params, family="Steane-III", provenance=prov)


def construct_hermitian_IV(q: int, n: int, c: int) -> QuantumParams:
    """Hermitian family for (q^2-1) | n, ord_n(q^2) = 2: [[n, n-4c-2, d >= c+2]]_q.

    The F_{q^2} code uses cosets r..r+c with n = r(q^2-1), 2 <= c < r-2.
    """
    _require(q > 3, f"q = {q} <= 3")
    q2 = q * q
    _require(gcd(q2, n) == 1, f"gcd({q2}, {n}) != 1")
    _require(n % (q2 - 1) == 0, f"(q^2 - 1) = {q2 - 1} does not divide n = {n}")
    _require(mult_order(n, q2) == 2, f"ord_{n}({q2}) != 2")
    r = n // (q2 - 1)
    _require(2 <= c < r - 2, f"c = {c} outside [2, r - 2 = {r - 2})")
    cosets = [coset_of(r + i, q2, n) for i in range(c + 1)]
    _require(cosets_disjoint(cosets), "construction cosets are not mutually disjoint")
    code = build_code(q2, n, cosets)
    params = hermitian(code)
    _check_double_entry(params, n - 4 * c - 2)
    if params.d_lower < c + 2:
        raise AssertionError(f"designed distance {params.d_lower} below claim {c + 2}")
    prov = dict(params.provenance, q=q, n=n, c=c, r=r)
    return replace(params, family="Hermitian-IV", provenance=prov)


def construct_hermitian_prime(q: int, n: int, r: int, s: Optional[int] = None) -> QuantumParams:
    """Prime-length Hermitian family: [[n, n-2mr, d >= r+2]]_q, m = ord_n(q^2).

    The F_{q^2} code uses cosets s, s+2, ..., s+r where C_s contains two
    consecutive integers.  n need only be a prime coprime to q with
    m >= 2; every hypothesis is checked on the instance.
    """
    q2 = q * q
    _require(is_prime(n), f"n = {n} is not prime")
    _require(n > q, f"n = {n} <= q = {q}")
    _require(gcd(q2, n) == 1, f"gcd({q2}, {n}) != 1")
    m = mult_order(n, q2)
    _require(m >= 2, f"ord_{n}({q2}) = {m} < 2")
    _require(r >= 1, f"r = {r} < 1")
    if s is None:
        s = find_consecutive_coset(q2, n)
    cs = coset_of(s, q2, n)
    _require(s % n in cs and (s + 1) % n in cs, f"coset of {s} lacks {s}, {s + 1}")
    cosets = [coset_of(s + o, q2, n) for o in _spread_offsets(r)]
    _require(cosets_disjoint(cosets), "construction cosets are not mutually disjoint")
    code = build_code(q2, n, cosets)
    params = hermitian(code)
    _check_double_entry(params, n - 2 * m * r)
    if params.d_lower < r + 2:
        raise AssertionError(f"designed distance {params.d_lower} below claim {r + 2}")
    prov = dict(params.provenance, q=q, n=n, s=s, r=r, m=m)
    return replace(params, family="Hermitian-prime", provenance=prov)


def hermitian_from_cosets(q: int, n: int, reps: Sequence[int]) -> QuantumParams:
    """Hermitian construction from an explicit list of q^2-ary coset reps."""
    q2 = q * q
    cosets = [coset_of(rep, q2, n) for rep in reps]
    _require(cosets_disjoint(cosets), "cosets are not mutually disjoint")
    code = build_code(q2, n, cosets)
    params = hermitian(code)
    prov = dict(params.provenance, q=q, n=n, coset_reps=list(reps))
    return replace(params, family="manual", provenance=prov)
