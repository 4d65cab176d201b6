"""Cyclic and BCH codes over F_q from cyclotomic defining sets.

Polynomials are dense coefficient tuples of discrete logs (lowest degree
first) over an ambient extension field F_{q^m}; a code's generator has
all coefficients inside the base subfield F_q, which the construction
verifies element by element.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import Coset, coset_of, cosets_disjoint, mult_order, negate_set, scale_set
from .fields import ZERO, FieldCtx, field_for


class ZeroCodeError(ValueError):
    """Raised for the zero code (defining set = all of Z_n)."""


@dataclass(frozen=True)
class Poly:
    """Polynomial over a FieldCtx; coeffs are logs, low degree first, trimmed."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return poly(ctx, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, tuple(self.ctx.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.ctx, ())
        ctx = self.ctx
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a != ZERO:
                for j, b in enumerate(other.coeffs):
                    if b != ZERO:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return poly(ctx, out)

    def scale(self, c: int) -> "Poly":
        if c == ZERO:
            return Poly(self.ctx, ())
        return Poly(self.ctx, tuple(self.ctx.mul(a, c) for a in self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        ctx = self.ctx
        rem = list(self.coeffs)
        dg = other.degree
        lead_inv = ctx.inv(other.coeffs[-1])
        quo = [ZERO] * max(len(rem) - dg, 0)
        for d in range(len(rem) - 1, dg - 1, -1):
            c = rem[d]
            if c == ZERO:
                continue
            qc = ctx.mul(c, lead_inv)
            quo[d - dg] = qc
            for t, b in enumerate(other.coeffs):
                if b != ZERO:
                    rem[d - dg + t] = ctx.sub(rem[d - dg + t], ctx.mul(qc, b))
        return poly(ctx, quo), poly(ctx, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def reciprocal(self) -> "Poly":
        """x^deg * f(1/x)."""
        return poly(self.ctx, list(reversed(self.coeffs)))

    def eval(self, x: int) -> int:
        ctx = self.ctx
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def in_subfield(self, q: int) -> bool:
        return all(self.ctx.in_subfield(c, q) for c in self.coeffs)

    def _check(self, other: "Poly") -> None:
        if self.ctx is not other.ctx:
            raise ValueError("polynomials over different fields")


def poly(ctx: FieldCtx, coeffs: Iterable[int]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == ZERO:
        out.pop()
    return Poly(ctx, tuple(out))


def poly_one(ctx: FieldCtx) -> Poly:
    return Poly(ctx, (0,))


def x_pow_n_minus_1(ctx: FieldCtx, n: int) -> Poly:
    return poly(ctx, [ctx.neg(0)] + [ZERO] * (n - 1) + [0])


def minimal_polynomial(ctx: FieldCtx, alpha: int, coset: Coset, q: int) -> Poly:
    """M(x) = prod_{i in coset} (x - alpha^i); coefficients verified in F_q."""
    prod = poly_one(ctx)
    for i in coset.elems:
        root = ctx.pow(alpha, i)
        prod = prod * poly(ctx, [ctx.neg(root), 0])
    if not prod.in_subfield(q):
        raise ArithmeticError(
            f"minimal polynomial of coset {coset.rep} has coefficients outside F_{q}"
        )
    return prod


@dataclass(frozen=True)
class DefiningSet:
    """Union of complete q-ary cyclotomic cosets mod n."""

    n: int
    q: int
    residues: tuple[int, ...]  # sorted ascending
    coset_reps: tuple[int, ...]

    def __post_init__(self):
        closed = {(z * self.q) % self.n for z in self.residues}
        if closed != set(self.residues):
            raise ValueError("defining set not closed under multiplication by q")


def defining_set(q: int, n: int, residues: Iterable[int]) -> DefiningSet:
    res = sorted({z % n for z in residues})
    reps = []
    seen: set[int] = set()
    for z in res:
        if z not in seen:
            c = coset_of(z, q, n)
            seen.update(c.elems)
            reps.append(c.rep)
    return DefiningSet(n=n, q=q, residues=tuple(res), coset_reps=tuple(reps))


def bch_designed_distance(residues: Iterable[int], n: int) -> tuple[int, int]:
    """(delta, b): longest cyclic run of consecutive residues, plus one.

    The run may wrap n-1 -> 0.  Ties broken by the smallest start b.
    Raises ZeroCodeError when the set is all of Z_n.
    """
    zset = set(residues)
    if not zset:
        return 1, 0
    if len(zset) >= n:
        raise ZeroCodeError("defining set is all of Z_n: zero code")
    best_len, best_b = 0, 0
    for b in sorted(zset):
        if (b - 1) % n in zset:
            continue  # not a run start
        length = 1
        while (b + length) % n in zset:
            length += 1
        if length > best_len:
            best_len, best_b = length, b
    return best_len + 1, best_b


def dual_defining_set(ds: DefiningSet) -> DefiningSet:
    """Defining set of the Euclidean dual: Z_n minus -Z."""
    neg = set(negate_set(ds.residues, ds.n))
    return defining_set(ds.q, ds.n, (z for z in range(ds.n) if z not in neg))


def is_euclidean_dual_containing(ds: DefiningSet) -> bool:
    """C^perp <= C  iff  Z and -Z are disjoint."""
    return not set(ds.residues).intersection(negate_set(ds.residues, ds.n))


def is_hermitian_dual_containing(ds: DefiningSet, q: int) -> bool:
    """Over F_{q^2}: C^perp_H <= C  iff  Z and -qZ are disjoint."""
    if ds.q != q * q:
        raise ValueError(f"code alphabet {ds.q} is not {q}^2")
    return not set(ds.residues).intersection(scale_set(ds.residues, -q, ds.n))


@dataclass(frozen=True)
class CyclicCode:
    """Length-n cyclic code over F_q with defining set Z inside F_{q^m}."""

    q: int
    n: int
    ctx: FieldCtx
    alpha: int  # log of a primitive n-th root of unity
    zset: DefiningSet
    g: Poly
    k: int
    delta: int  # BCH designed distance from the full defining set
    b: int      # start of the longest consecutive run in Z

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.k, self.delta

    def contains_word(self, word: Poly) -> bool:
        return (word % self.g).is_zero


def _finish_code(q: int, n: int, ctx: FieldCtx, alpha: int,
                 ds: DefiningSet, g: Poly) -> CyclicCode:
    if g.degree != len(ds.residues):
        raise AssertionError("deg g != |Z|")
    if not x_pow_n_minus_1(ctx, n).divmod(g)[1].is_zero:
        raise AssertionError("generator does not divide x^n - 1")
    delta, b = bch_designed_distance(ds.residues, n)
    return CyclicCode(q=q, n=n, ctx=ctx, alpha=alpha, zset=ds, g=g,
                      k=n - len(ds.residues), delta=delta, b=b)


def build_code(q: int, n: int, cosets: Sequence[Coset]) -> CyclicCode:
    """Cyclic code whose generator is the product of the cosets' minimal polys."""
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if not cosets_disjoint(cosets):
        raise ValueError("cosets overlap")
    for c in cosets:
        if c.q != q or c.n != n:
            raise ValueError("coset base/modulus mismatch")
    ctx, alpha = field_for(q, n)
    g = poly_one(ctx)
    residues: list[int] = []
    for c in cosets:
        g = g * minimal_polynomial(ctx, alpha, c, q)
        residues.extend(c.elems)
    ds = defining_set(q, n, residues)
    return _finish_code(q, n, ctx, alpha, ds, g)


def build_code_complement(q: int, n: int, excluded: Sequence[Coset]) -> CyclicCode:
    """Code defined by every coset except the given ones.

    The generator is (x^n - 1) divided by the excluded cosets' minimal
    polynomials, avoiding a long product when the complement is large.
    """
    if not cosets_disjoint(excluded):
        raise ValueError("excluded cosets overlap")
    ctx, alpha = field_for(q, n)
    h = poly_one(ctx)
    dropped: set[int] = set()
    for c in excluded:
        if c.q != q or c.n != n:
            raise ValueError("coset base/modulus mismatch")
        h = h * minimal_polynomial(ctx, alpha, c, q)
        dropped.update(c.elems)
    g, rem = x_pow_n_minus_1(ctx, n).divmod(h)
    if not rem.is_zero:
        raise AssertionError("excluded minimal polynomials do not divide x^n - 1")
    if not g.in_subfield(q):
        raise AssertionError("complement generator has coefficients outside F_q")
    ds = defining_set(q, n, (z for z in range(n) if z not in dropped))
    return _finish_code(q, n, ctx, alpha, ds, g)


def code_from_residues(q: int, n: int, residues: Iterable[int]) -> CyclicCode:
    """Code with the given defining set (must be a union of cosets)."""
    ds = defining_set(q, n, residues)
    return build_code(q, n, [coset_of(r, q, n) for r in ds.coset_reps])


def code_contains(c1: CyclicCode, c2: CyclicCode) -> bool:
    """True iff C2 is a subcode of C1 (g1 | g2, equivalently Z1 <= Z2)."""
    if (c1.n, c1.q) != (c2.n, c2.q):
        raise ValueError("codes have different (n, q)")
    by_sets = set(c1.zset.residues) <= set(c2.zset.residues)
    by_polys = c1.g.divides(c2.g)
    if by_sets != by_polys:
        raise AssertionError("defining-set and generator-divisibility checks disagree")
    return by_sets
