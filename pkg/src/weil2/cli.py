"""Command-line front end.

Subcommands:

* ``classify``  -- full verdict for one (q, a, b)
* ``enumerate`` -- all classes over F_q with q^k | group order
* ``census``    -- exhaustive curve census for one supported q
* ``verify``    -- the whole verification suite, one verdict line per check

Exit codes are fixed for scripting: 0 success, 1 verification failure,
2 usage or input error, 3 census internal assertion.  All record output
is deterministic (byte-identical across runs and ``--jobs`` values);
timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arith import NotAPrimePower, parse_prime_power
from .census import (
    InadmissibleCount,
    ParityViolation,
    UnsupportedQ,
    VerificationFailure,
    cache_path,
    census_counts,
    verify_census,
)
from .classify import (
    ClassificationRecord,
    classify_record,
    closed_form,
    enumerate_order_divisible,
    non_jacobian_exceptions,
)
from .weil import WeilCoeffs, admissibility, split

CSV_HEADER = "q,a,b,admissible,p_rank,simple,s,t,order,c,jacobian"

DEEP_CENSUS_Q = (2, 3, 5, 7, 9)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _row(rec: ClassificationRecord) -> dict:
    return {
        "q": rec.q.q,
        "a": rec.a,
        "b": rec.b,
        "admissible": rec.admissible,
        "conditions": sorted(rec.matched),
        "p_rank": rec.p_rank,
        "simple": rec.simple,
        "s": rec.split.s if rec.split else None,
        "t": rec.split.t if rec.split else None,
        "order": rec.order,
        "c": rec.c,
        "jacobian": rec.jacobian,
    }


def emit_records(records, fmt: str, out) -> None:
    rows = [_row(r) for r in records]
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
        return
    if fmt == "csv":
        out.write(CSV_HEADER + "\n")
        keys = CSV_HEADER.split(",")
        for row in rows:
            out.write(",".join(_cell(row[k]) for k in keys) + "\n")
        return
    keys = CSV_HEADER.split(",") + ["conditions"]
    cells = [[_cell(row[k]) if row[k] is not None else "-" for k in keys[:-1]]
             + [";".join(row["conditions"]) or "-"] for row in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) if cells else len(k)
              for i, k in enumerate(keys)]
    out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for c in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip() + "\n")


# ---------------------------------------------------------------------------
# verification checks
# ---------------------------------------------------------------------------


def _prime_powers(limit: int):
    for q in range(2, limit + 1):
        try:
            yield parse_prime_power(q)
        except NotAPrimePower:
            continue


def check_closed_form(qmax: int) -> tuple[bool, str]:
    """Closed form == brute enumeration of q^2-divisible classes, q <= qmax."""
    for pp in _prime_powers(qmax):
        brute = [(r.a, r.b) for r in enumerate_order_divisible(pp, 2)]
        if brute != closed_form(pp):
            return False, f"mismatch at q={pp.q}: enumeration {brute}, closed form {closed_form(pp)}"
    return True, "OK"


def check_non_jacobian_table(qmax: int = 27) -> tuple[bool, str]:
    """The non-Jacobian classes among them match the exception table, q <= qmax."""
    for pp in _prime_powers(qmax):
        got = {(r.a, r.b) for r in enumerate_order_divisible(pp, 2) if r.jacobian is False}
        want = set(non_jacobian_exceptions(pp))
        if got != want:
            return False, f"mismatch at q={pp.q}: got {sorted(got)}, expected {sorted(want)}"
    return True, "OK"


def check_delta_spots() -> tuple[bool, str]:
    """delta_p of (q, -1, q) is 9q^2 - 4q = 28, 128, 544 at q = 2, 4, 8."""
    for q, want in ((2, 28), (4, 128), (8, 544)):
        w = WeilCoeffs(parse_prime_power(q), -1, q)
        if w.delta_p != 9 * q * q - 4 * q or w.delta_p != want:
            return False, f"delta_p(q={q},-1,q) = {w.delta_p}, expected {want}"
    return True, "OK"


def check_split_spots() -> tuple[bool, str]:
    """Known splittings and p-ranks of the two q^2-divisible split classes."""
    cases = ((4, 0, -1, (3, -3), 2), (2, -1, 2, (2, -1), 1))
    for q, a, b, st, rank in cases:
        w = WeilCoeffs(parse_prime_power(q), a, b)
        sp = split(w)
        got = (sp.s, sp.t) if sp else None
        if got != st:
            return False, f"split({q},{a},{b}) = {got}, expected {st}"
        if admissibility(w).p_rank != rank:
            return False, f"p_rank({q},{a},{b}) = {admissibility(w).p_rank}, expected {rank}"
    return True, "OK"


def check_census(q: int, cache_dir, jobs: int) -> tuple[bool, str]:
    try:
        report = verify_census(q, cache_dir=cache_dir, jobs=jobs)
    except VerificationFailure as e:
        return False, str(e)
    excl = sorted(non_jacobian_exceptions(q))
    suffix = f"set equality OK ({len(report.weil_set)} classes, {report.models} models"
    suffix += f"; {', '.join(map(str, excl))} excluded)" if excl else ")"
    return True, suffix


def run_verify(qmax: int, deep: bool, cache_dir, jobs: int, out) -> int:
    checks: list[tuple[str, object]] = [
        (f"order-divisible closed form vs enumeration (q<={qmax})", lambda: check_closed_form(qmax)),
        ("non-jacobian exception table (q<=27)", lambda: check_non_jacobian_table(min(qmax, 27))),
        ("p-adic discriminant spot values {28,128,544}", check_delta_spots),
        ("split and p-rank spot values", check_split_spots),
    ]
    if deep:
        for q in DEEP_CENSUS_Q:
            checks.append((f"census q={q}", lambda q=q: check_census(q, cache_dir, jobs)))
    for name, fn in checks:
        ok, detail = fn()
        if not ok:
            out.write(f"{name}: FAIL: {detail}\n")
            return 1
        out.write(f"{name}: {detail}\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weil2",
        description="Isogeny classes of abelian surfaces over F_q: classification, "
        "group-order divisibility, Jacobian realizability, and curve census.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one coefficient pair (q, a, b)")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--format", choices=("table", "json", "csv"), default="table")

    e = sub.add_parser("enumerate", help="classes over F_q with q^k | group order")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--k", type=int, default=2)
    e.add_argument("--format", choices=("table", "json", "csv"), default="table")

    s = sub.add_parser("census", help="exhaustive genus-2 model census over F_q")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--force", action="store_true", help="recompute even if cached")
    s.add_argument("--cache", default=None, help="cache directory (WEIL_CACHE_DIR overrides)")
    s.add_argument("--heavy", action="store_true", help="allow the large q in {4, 13} runs")

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--deep", action="store_true", help="also run the census checks")
    v.add_argument("--qmax", type=int, default=200)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--cache", default=None)
    return p


def cmd_classify(args) -> int:
    rec = classify_record(args.q, args.a, args.b)
    emit_records([rec], args.format, sys.stdout)
    return 0


def cmd_enumerate(args) -> int:
    if args.k < 1:
        raise ValueError("--k must be >= 1")
    emit_records(enumerate_order_divisible(args.q, args.k), args.format, sys.stdout)
    return 0


def cmd_census(args) -> int:
    t0 = time.time()
    counts, models, cached = census_counts(
        args.q, cache_dir=args.cache, force=args.force, jobs=args.jobs, heavy=args.heavy
    )
    path = cache_path(args.q, args.cache)
    src = "cache" if cached else "computed"
    print(f"census q={args.q}: {models} models, {len(counts)} distinct (a,b) [{src}: {path}]")
    for a, b in closed_form(args.q):
        n = counts.get((a, b), 0)
        state = f"realized by {n} models" if n else "absent"
        print(f"  ({a},{b}): {state}")
    print(f"wall time {time.time() - t0:.2f}s", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    return run_verify(args.qmax, args.deep, args.cache, args.jobs, sys.stdout)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "classify": cmd_classify,
        "enumerate": cmd_enumerate,
        "census": cmd_census,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except (NotAPrimePower, UnsupportedQ, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ParityViolation, InadmissibleCount, VerificationFailure) as e:
        print(f"census assertion failed: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
