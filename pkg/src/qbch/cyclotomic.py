"""q-ary cyclotomic cosets modulo n and related residue arithmetic.

Pure integer machinery: orbits of multiplication by q on Z_n, complete
partitions, linear congruences, and the negation/scaling maps used by
the dual-containment predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Coset:
    """One q-ary cyclotomic coset mod n, canonical rep = minimum element."""

    rep: int
    elems: tuple[int, ...]  # sorted ascending
    q: int
    n: int

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, item: int) -> bool:
        return item in self.elems


@dataclass(frozen=True)
class CosetPartition:
    q: int
    n: int
    m: int  # multiplicative order of q mod n
    cosets: tuple[Coset, ...]  # sorted by rep


def mult_order(n: int, q: int) -> int:
    """Smallest m >= 1 with q^m = 1 mod n."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    m = 1
    acc = q % n
    while acc != 1:
        acc = (acc * q) % n
        m += 1
    return m


def coset_of(s: int, q: int, n: int) -> Coset:
    """Orbit of s under multiplication by q mod n."""
    if n == 1:
        return Coset(rep=0, elems=(0,), q=q, n=1)
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    s %= n
    elems = [s]
    cur = (s * q) % n
    while cur != s:
        elems.append(cur)
        cur = (cur * q) % n
    elems.sort()
    return Coset(rep=elems[0], elems=tuple(elems), q=q, n=n)


def partition(q: int, n: int) -> CosetPartition:
    """All q-ary cyclotomic cosets mod n, a disjoint cover of Z_n."""
    if n == 1:
        return CosetPartition(q=q, n=1, m=1, cosets=(coset_of(0, q, 1),))
    m = mult_order(n, q)
    seen = [False] * n
    cosets = []
    for s in range(n):
        if not seen[s]:
            c = coset_of(s, q, n)
            for x in c.elems:
                seen[x] = True
            cosets.append(c)
    return CosetPartition(q=q, n=n, m=m, cosets=tuple(cosets))


def solve_linear_congruence(a: int, b: int, n: int) -> list[int]:
    """All x in [0, n) with a*x = b mod n; empty iff gcd(a, n) does not divide b."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    a %= n
    b %= n
    d = gcd(a, n) if a else n
    if b % d != 0:
        return []
    if a == 0:
        return list(range(n)) if b == 0 else []
    # one solution of (a/d) x = (b/d) mod (n/d), then d shifted copies
    n0 = n // d
    a0 = (a // d) % n0
    b0 = (b // d) % n0
    x0 = (b0 * pow(a0, -1, n0)) % n0 if n0 > 1 else 0
    return sorted((x0 + t * n0) % n for t in range(d))


def find_consecutive_coset(q: int, n: int) -> int:
    """Residue s whose q-ary coset mod n contains both s and s+1.

    Solves (q-1)x = 1 mod n and verifies x*q = x+1 mod n.  Requires
    gcd(q, n) = 1 and gcd(q-1, n) = 1; primality of n is not needed.
    """
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if gcd(q - 1, n) != 1:
        raise ValueError(f"gcd({q - 1}, {n}) != 1: no consecutive coset guaranteed")
    sols = solve_linear_congruence(q - 1, 1, n)
    if not sols:
        raise AssertionError("congruence unexpectedly unsolvable")
    s = sols[0]
    if (s * q) % n != (s + 1) % n:
        raise AssertionError("congruence solution failed orbit verification")
    return s


def negate_set(residues: Iterable[int], n: int) -> tuple[int, ...]:
    """{-z mod n : z in residues}, sorted ascending."""
    return tuple(sorted({(-z) % n for z in residues}))


def scale_set(residues: Iterable[int], c: int, n: int) -> tuple[int, ...]:
    """{c*z mod n : z in residues}, sorted ascending."""
    return tuple(sorted({(c * z) % n for z in residues}))


def cosets_disjoint(cosets: Sequence[Coset]) -> bool:
    seen: set[int] = set()
    for c in cosets:
        if seen.intersection(c.elems):
            return False
        seen.update(c.elems)
    return True
