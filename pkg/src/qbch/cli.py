"""Command-line front end: coset exploration, code construction,
family search, and reproduction of the published comparison tables.

Exit codes: 0 success, 1 hypothesis/verification failure, 2 usage error.
All output is deterministic; there is no randomness anywhere.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd
from typing import Optional

from .cyclotomic import find_consecutive_coset, mult_order, partition
from .distance_oracle import OracleBudgetError, verify_quantum_distance
from .fields import DEFAULT_MAX_ORDER, is_prime, prime_power
from .quantum_constructions import ConstructionError, QuantumParams, singleton_check
from . import tables

SEARCH_N_CAP = 2000  # documented cap on search ranges
SEARCH_R_CAP = 6     # largest coset count tried per prime-length family

RECORD_FIELDS = [
    "family", "q", "n", "k", "d_lower", "d_exact", "mds",
    "defining_set_c1", "defining_set_c2",
    "checks.subset", "checks.euclidean_dc", "checks.hermitian_dc", "checks.oracle",
]


def to_record(params: QuantumParams, oracle_status: Optional[str] = None) -> dict:
    """JSON-ready record; absent optionals are omitted, not null."""
    rec = {
        "family": params.family,
        "q": params.q,
        "n": params.n,
        "k": params.k,
        "d_lower": params.d_lower,
    }
    if params.d_exact is not None:
        rec["d_exact"] = params.d_exact
    if params.mds:
        rec["mds"] = True
    prov = params.provenance
    if "defining_set_c1" in prov:
        rec["defining_set_c1"] = list(prov["defining_set_c1"])
    if "defining_set_c2" in prov:
        rec["defining_set_c2"] = list(prov["defining_set_c2"])
    checks: dict = {}
    rule = prov.get("rule")
    if rule in ("css", "steane"):
        checks["subset"] = True  # construction refuses otherwise
    if rule == "steane":
        checks["euclidean_dc"] = True
    if rule == "hermitian":
        checks["hermitian_dc"] = True
    if oracle_status is not None:
        checks["oracle"] = oracle_status
    rec["checks"] = checks
    return rec


def _emit_records(records: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(records, out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=RECORD_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for rec in records:
            flat = dict(rec)
            for key, val in flat.pop("checks", {}).items():
                flat[f"checks.{key}"] = val
            for key in ("defining_set_c1", "defining_set_c2"):
                if key in flat:
                    flat[key] = " ".join(map(str, flat[key]))
            writer.writerow(flat)
    else:
        for rec in records:
            mds = " MDS" if rec.get("mds") else ""
            d = rec.get("d_exact")
            dtxt = f"d={d}" if d is not None else f"d>={rec['d_lower']}"
            print(
                f"[[{rec['n']}, {rec['k']}, {dtxt}]]_{rec['q']}{mds}  ({rec['family']})",
                file=out,
            )


def cmd_cosets(args) -> int:
    q, n = args.q, args.n
    if gcd(q, n) != 1:
        print(f"error: gcd({q}, {n}) != 1", file=sys.stderr)
        return 1
    part = partition(q, n)
    try:
        consecutive = find_consecutive_coset(q, n)
    except ValueError:
        consecutive = None
    singles = [c.rep for c in part.cosets if len(c) == 1]
    if args.format == "json":
        payload = {
            "q": q,
            "n": n,
            "m": part.m,
            "cosets": {str(c.rep): list(c.elems) for c in part.cosets},
            "singletons": singles,
        }
        if consecutive is not None:
            payload["consecutive_rep"] = consecutive
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{q}-ary cyclotomic cosets mod {n} (m = ord = {part.m}):")
        for c in part.cosets:
            flags = []
            if len(c) == 1:
                flags.append("singleton")
            if consecutive is not None and consecutive in c.elems:
                flags.append("contains consecutive pair")
            tag = f"   <- {', '.join(flags)}" if flags else ""
            print(f"  C_{c.rep} = {{{', '.join(map(str, c.elems))}}}{tag}")
        print(f"{len(part.cosets)} cosets; singleton reps: {singles or 'none'}")
        if consecutive is not None:
            print(f"consecutive-pair coset: C_{consecutive}")
    return 0


def _construct(args) -> QuantumParams:
    family = args.family
    gen = tables.GENERATORS[family]
    if family in ("css-I", "steane-nonprime", "hermitian-IV"):
        if args.c is None:
            raise ConstructionError(f"{family} requires --c")
        return gen(args.q, args.n, args.c)
    if family == "hermitian-manual":
        if not args.cosets:
            raise ConstructionError("hermitian-manual requires --cosets")
        reps = [int(x) for x in args.cosets.split(",")]
        return gen(args.q, args.n, reps)
    if args.r is None:
        raise ConstructionError(f"{family} requires --r")
    return gen(args.q, args.n, args.r, s=args.s)


def cmd_construct(args) -> int:
    try:
        params = _construct(args)
    except (ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    oracle_status = None
    if args.verify_distance:
        try:
            params, report = verify_quantum_distance(params, w_max=args.verify_distance)
            if report.weight is not None:
                oracle_status = f"exact_weight={report.weight}"
            else:
                oracle_status = f"no_word_below_{args.verify_distance}"
        except OracleBudgetError as exc:
            oracle_status = f"not_verified: {exc}"
    _emit_records([to_record(params, oracle_status)], args.format)
    return 0


def _search_points(q: int, n: int, families: list[str]):
    """Admissible (family, args) grid points for one (q, n)."""
    p, j = prime_power(q)
    if gcd(q, n) != 1:
        return
    if "css-II" in families or "steane-III" in families:
        if is_prime(n) and n > q:
            m = mult_order(n, q)
            if m >= 2 and p ** (j * m) <= DEFAULT_MAX_ORDER:
                if "css-II" in families:
                    for r in range(1, SEARCH_R_CAP + 1):
                        yield "css-II", (r,)
                if "steane-III" in families:
                    for r in range(2, SEARCH_R_CAP + 1):
                        yield "steane-III", (r,)
    if n % (q - 1) == 0 and n > q:
        r = n // (q - 1)
        if mult_order(n, q) == 2 and p ** (2 * j) <= DEFAULT_MAX_ORDER:
            if "css-I" in families:
                for c in range(2, r + 1):
                    yield "css-I", (c,)
            if "steane-nonprime" in families and r > 3:
                for c in range(1, r - 2):
                    yield "steane-nonprime", (c,)
    q2 = q * q
    if "hermitian-IV" in families and gcd(q2, n) == 1 and n % (q2 - 1) == 0:
        if mult_order(n, q2) == 2 and p ** (4 * j) <= DEFAULT_MAX_ORDER:
            r = n // (q2 - 1)
            for c in range(2, r - 2):
                yield "hermitian-IV", (c,)
    if "hermitian-prime" in families and is_prime(n) and n > q and gcd(q2, n) == 1:
        m = mult_order(n, q2)
        if m >= 2 and p ** (2 * j * m) <= DEFAULT_MAX_ORDER:
            for r in range(1, SEARCH_R_CAP + 1):
                yield "hermitian-prime", (r,)


def cmd_search(args) -> int:
    if args.n_max > SEARCH_N_CAP:
        print(f"error: --n-max capped at {SEARCH_N_CAP}", file=sys.stderr)
        return 2
    families = args.families.split(",") if args.families else list(tables.GENERATORS)
    for fam in families:
        if fam not in tables.GENERATORS:
            print(f"error: unknown family {fam!r}", file=sys.stderr)
            return 2
    results = []
    for n in range(max(args.n_min, 2), args.n_max + 1):
        for family, gen_args in _search_points(args.q, n, families):
            try:
                params = tables.GENERATORS[family](args.q, n, *gen_args)
            except (ConstructionError, ValueError) as exc:
                if args.explain:
                    print(f"skip {family} q={args.q} n={n} {gen_args}: {exc}",
                          file=sys.stderr)
                continue
            results.append(params)
    results.sort(key=lambda pr: (pr.q, pr.n, -pr.k, pr.d_lower, pr.family))
    _emit_records([to_record(pr) for pr in results], args.format)
    return 0


def cmd_table(args) -> int:
    try:
        rows = tables.generate_table(args.id, verify_mds=not args.skip_mds_oracle)
    except tables.TableMismatch as exc:
        print(f"error: table {args.id} regeneration mismatch: {exc}", file=sys.stderr)
        return 1
    if args.format in ("json", "csv"):
        records = []
        for row, params in rows:
            rec = to_record(params)
            if row.comparison is not None:
                rec["comparison"] = row.comparison
            records.append(rec)
        _emit_records(records, args.format)
    else:
        print(f"Table {args.id} (regenerated new codes | literature reference):")
        for row, params in rows:
            mds = " (MDS)" if params.mds else ""
            comp = row.comparison or "---"
            print(f"  [[{params.n}, {params.k}, d>={params.d_lower}]]_{params.q}{mds}"
                  f"  |  {comp}")
    return 0


def cmd_verify(args) -> int:
    args.verify_distance = args.w or None
    try:
        params = _construct(args)
    except (ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    w_max = args.w or params.d_lower
    try:
        verified, report = verify_quantum_distance(params, w_max=w_max)
    except OracleBudgetError as exc:
        print(f"error: oracle budget: {exc}", file=sys.stderr)
        return 1
    status = (f"exact_weight={report.weight}" if report.weight is not None
              else f"no_word_below_{w_max}")
    _emit_records([to_record(verified, status)], args.format)
    if report.weight is not None and report.weight < params.d_lower:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbch",
        description="Nonbinary quantum BCH code constructions from cyclotomic cosets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("cosets", help="list q-ary cyclotomic cosets mod n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_cosets)

    def add_construct_args(p):
        p.add_argument("--family", choices=sorted(tables.GENERATORS), required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--c", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--cosets", help="comma-separated coset reps (hermitian-manual)")
        add_format(p)

    p = sub.add_parser("construct", help="build one quantum code")
    add_construct_args(p)
    p.add_argument("--verify-distance", type=int, metavar="W",
                   help="run the distance oracle up to weight W")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="sweep a (q, n) grid for admissible codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--families", help="comma-separated family list (default: all)")
    p.add_argument("--explain", action="store_true",
                   help="report skipped grid points on stderr")
    add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="regenerate a published comparison table")
    p.add_argument("--id", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--skip-mds-oracle", action="store_true",
                   help="skip distance-oracle confirmation of MDS rows")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="construct a code and oracle-check its distance")
    add_construct_args(p)
    p.add_argument("--w", type=int, help="oracle search depth (default: d_lower)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
