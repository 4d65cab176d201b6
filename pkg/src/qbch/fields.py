"""Exact arithmetic in small finite fields via Zech logarithm tables.

Each field F_{p^K} is built once around a distinguished generator gamma,
a root of the lexicographically smallest monic primitive polynomial of
degree K over F_p (coefficients ordered constant term first).  Nonzero
elements are stored as discrete logarithms relative to gamma; zero is
the sentinel ``ZERO``.  The subfield of order p^j (j | K) is then the
multiplicative subgroup of index (p^K - 1)/(p^j - 1) together with
zero, so subfield membership reduces to an exponent-divisibility test.
"""

from __future__ import annotations

import functools
from math import gcd

# Sentinel discrete log for the additive identity.
ZERO = -1

# Largest field order we will build tables for.  7^6 = 117649 is the
# biggest field any shipped construction needs (q = 7, n = 144).
DEFAULT_MAX_ORDER = 150_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p^j with p prime; raises ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    f = 2
    while f * f <= q:
        if q % f == 0:
            p = f
            break
        f += 1
    j = 0
    rest = q
    while rest % p == 0:
        rest //= p
        j += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, j


# -- dense polynomial arithmetic over F_p, used only during construction --


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """(a * b) mod f over F_p; f monic, coefficients low degree first."""
    deg_f = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for d in range(len(res) - 1, deg_f - 1, -1):
        c = res[d]
        if c:
            res[d] = 0
            for t in range(deg_f):
                res[d - deg_f + t] = (res[d - deg_f + t] - c * f[t]) % p
    return _trim(res[:deg_f] if len(res) > deg_f else res)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _is_primitive(f: list[int], p: int, k: int) -> bool:
    """True iff x generates the full multiplicative group of F_p[x]/(f).

    Full multiplicative order p^k - 1 for x also forces f irreducible,
    since a reducible quotient ring has strictly fewer units.
    """
    e = p**k - 1
    x = [0, 1]
    if _ppowmod(x, e, f, p) != [1]:
        return False
    for ell in prime_factors(e):
        if _ppowmod(x, e // ell, f, p) == [1]:
            return False
    return True


def _smallest_primitive_poly(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree k.

    Coefficient tuples are ordered constant term first, each coefficient
    by its residue in [0, p).  Deterministic across runs and platforms.
    """
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue  # x | f, never primitive
        f = coeffs + [1]
        if _is_primitive(f, p, k):
            return tuple(f)
    raise AssertionError("no primitive polynomial found")  # unreachable


class FieldCtx:
    """Immutable arithmetic context for F_{p^K}.

    Never mutated after construction; safe to share across threads.
    """

    def __init__(self, p: int, k: int, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        order = p**k
        if order > max_order:
            raise ValueError(f"field order {order} exceeds table budget {max_order}")
        self.p = p
        self.k = k
        self.order = order
        self.defining_poly = _smallest_primitive_poly(p, k)
        e = order - 1

        # Discrete-log tables: poly_rep[i] = coordinates of gamma^i in the
        # polynomial basis {1, x, ..., x^{k-1}} of F_p[x]/(f).
        f = list(self.defining_poly)
        reps: list[tuple[int, ...]] = []
        cur = [1] + [0] * (k - 1)
        for _ in range(e):
            reps.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for t in range(k):
                    cur[t] = (cur[t] - carry * f[t]) % p
        if tuple(cur) != reps[0]:
            raise AssertionError("generator does not have full order")
        self.poly_rep = reps
        self.log_of = {rep: i for i, rep in enumerate(reps)}
        if len(self.log_of) != e:
            raise AssertionError("discrete logs are not distinct")

        # zech[i] = log(1 + gamma^i), or ZERO when 1 + gamma^i = 0.
        zech = []
        for rep in reps:
            bumped = (rep[0] + 1) % p, *rep[1:]
            zech.append(self.log_of.get(bumped, ZERO))
        self.zech_table = zech

        self._half = e // 2 if p != 2 else 0  # log of -1
        self.prime_logs = [ZERO] + [
            self.log_of[(a,) + (0,) * (k - 1)] for a in range(1, p)
        ]

    # -- element arithmetic (arguments and results are discrete logs) --

    @property
    def one(self) -> int:
        return 0

    @property
    def zero(self) -> int:
        return ZERO

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        e = self.order - 1
        z = self.zech_table[(b - a) % e]
        return ZERO if z == ZERO else (a + z) % e

    def neg(self, a: int) -> int:
        if a == ZERO:
            return ZERO
        return (a + self._half) % (self.order - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.order - 1)

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % (self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, exp: int) -> int:
        if a == ZERO:
            if exp > 0:
                return ZERO
            if exp == 0:
                return 0
            raise ZeroDivisionError("negative power of zero")
        return (a * exp) % (self.order - 1)

    def arith(self, op: str, a: int, b: int = ZERO) -> int:
        """Dispatch form of the element operations."""
        table = {
            "add": self.add, "sub": self.sub, "mul": self.mul,
            "div": self.div, "pow": self.pow,
        }
        if op in table:
            return table[op](a, b)
        if op == "neg":
            return self.neg(a)
        if op == "inv":
            return self.inv(a)
        raise ValueError(f"unknown op {op!r}")

    def embed_prime(self, a: int) -> int:
        """Log of the prime-field residue a (0 <= a < p) inside this field."""
        return self.prime_logs[a % self.p]

    def element_order(self, a: int) -> int:
        if a == ZERO:
            raise ValueError("zero has no multiplicative order")
        e = self.order - 1
        return e // gcd(e, a % e)

    # -- subfields and roots of unity --

    def subfield_step(self, q: int) -> int:
        """Log stride of the order-q subfield's multiplicative group."""
        qp, qj = prime_power(q)
        if qp != self.p or self.k % qj != 0:
            raise ValueError(f"F_{q} is not a subfield of F_{self.order}")
        return (self.order - 1) // (q - 1)

    def subfield_elements(self, q: int) -> list[int]:
        step = self.subfield_step(q)
        return sorted([ZERO] + [t * step for t in range(q - 1)])

    def in_subfield(self, a: int, q: int) -> bool:
        if a == ZERO:
            return True
        return a % self.subfield_step(q) == 0

    def nth_root_of_unity(self, n: int) -> int:
        e = self.order - 1
        if n < 1 or e % n != 0:
            raise ValueError(f"{n} does not divide {e}")
        return (e // n) % e

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of the element in the polynomial basis over F_p."""
        if a == ZERO:
            return (0,) * self.k
        return self.poly_rep[a]

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k}, order={self.order})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """Build (or fetch the cached) field F_{p^k}."""
    return FieldCtx(p, k, max_order=max_order)


def field_for(q: int, n: int) -> tuple[FieldCtx, int]:
    """Field F_{q^m} containing a primitive n-th root of unity over F_q.

    Returns the ambient FieldCtx and the log of alpha, a primitive n-th
    root of unity.  m is the multiplicative order of q modulo n.
    """
    p, j = prime_power(q)
    if n == 1:
        m = 1
    else:
        if gcd(q, n) != 1:
            raise ValueError(f"gcd({q}, {n}) != 1")
        m = 1
        acc = q % n
        while acc != 1:
            acc = (acc * q) % n
            m += 1
    ctx = make_field(p, j * m)
    return ctx, ctx.nth_root_of_unity(n)
