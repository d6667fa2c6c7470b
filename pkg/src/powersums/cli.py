"""Command-line front end: ``powersums {sum,verify,search,table,poly,bench}``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
3 a precondition failed under ``--strict``.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from powersums import divisibility as dv
from powersums import identities as gw
from powersums.faulhaber_poly import faulhaber_polynomial, to_triangular_basis
from powersums.power_sums import Algorithm, sum_powers
from powersums.report import DivisibilityReport
from powersums.special_numbers import BernoulliConvention, bernoulli_table, stirling2_row

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_STRICT = 3

JOBS_ENV = "POWERSUM_JOBS"


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """"5", "1..10" (inclusive) or a comma list of either."""
    out: list[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if hi < lo:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif re.fullmatch(r"-?\d+", part):
            out.append(int(part))
        else:
            raise UsageError(f"cannot parse range {text!r}")
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def parse_bounds(text: str) -> tuple[int, int]:
    values = parse_range(text)
    return min(values), max(values)


def parse_family(text: str) -> tuple[int, int]:
    """"6n+1" -> (6, 1)."""
    m = re.fullmatch(r"\s*(\d*)\s*\*?\s*n\s*(?:([+-])\s*(\d+))?\s*", text)
    if not m:
        raise UsageError(f"cannot parse family {text!r}; expected e.g. 6n+1")
    a = int(m.group(1)) if m.group(1) else 1
    b = int(m.group(3) or 0) * (-1 if m.group(2) == "-" else 1)
    return a, b


def _dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


# -- verify ---------------------------------------------------------------


@dataclass
class Claim:
    run: Callable[..., DivisibilityReport]
    params: tuple[str, ...]
    defaults: dict[str, Callable[[dict[str, int]], int] | int] = field(default_factory=dict)
    help: str = ""


def _pair(claim_id: str) -> Callable[..., DivisibilityReport]:
    def run(x: int, y: int, m: int, k: int) -> DivisibilityReport:
        return dv.check_mk_pair(x, y, m, k, claim_id=claim_id)

    return run


def _block(claim_id: str) -> Callable[..., DivisibilityReport]:
    def run(m: int, k: int) -> DivisibilityReport:
        return dv.check_block(m, k, claim_id=claim_id)

    return run


_y_from_k = lambda a: a["k"] - a["x"]  # noqa: E731

CLAIMS: dict[str, Claim] = {
    "prop-3.3": Claim(gw.check_prop_pxy, ("x", "y", "p"), help="p x y (x+y) | x^p + y^p - (x+y)^p"),
    "prop-4.1": Claim(_pair("prop-4.1"), ("x", "y", "m", "k"), {"m": 1, "y": _y_from_k}, "x + y = p prime"),
    "prop-4.4": Claim(_pair("prop-4.4"), ("x", "y", "m", "k"), {"m": 1, "y": _y_from_k}, "x + y = k odd"),
    "cor-4.2": Claim(_block("cor-4.2"), ("m", "k"), {"m": 1}, "S(m,p), S'(m,p) = 0 mod p^2"),
    "prop-4.5": Claim(_block("prop-4.5"), ("m", "k"), {"m": 1}, "S(m,k), S'(m,k) = 0 mod k^2"),
    "prop-4.3": Claim(dv.check_prime_power_block, ("m", "p", "t"), {"m": 1}, "prime-power block mod p^(t+1)"),
    "prop-4.6": Claim(dv.residue_even_m, ("m", "k"), help="even m pair-product residue"),
    "cor-4.7": Claim(dv.check_s2l3, ("l",), help="S(2l,3) = 2 mod 9"),
    "prop-4.8": Claim(dv.check_euler_block, ("p", "l"), {"l": 1}, "S((p-1)l,p) = p-1 mod p^2"),
    "cor-4.9": Claim(dv.check_cor49, ("p",), help="pair-product form of p-1 mod p^2"),
    "prop-4.10": Claim(dv.check_k_mult_of_n, ("n", "k"), help="n | k implies n^2 | S_k(n)"),
    "thm-4.11": Claim(dv.ds_report, ("n", "k"), help="n | S_k(n) iff no p | n with p-1 | k"),
    "thm-4.12": Claim(dv.check_prime_power_square, ("p", "alpha", "k"), {"alpha": 1}, "p^(2 alpha) | S_k(p^alpha)"),
    "thm-4.13": Claim(dv.check_pq, ("p", "q", "k"), help="(pq)^2 | d S_k(pq)"),
    "thm-3.1": Claim(dv.check_arith_prog, ("a", "d", "k"), help="arithmetic progression power sum mod k^2"),
    "prop-3.2": Claim(dv.check_shifted_prop, ("p", "n", "x", "m"), help="shifted sum mod p^2"),
    "cor-4.13": Claim(dv.check_integrality, ("n", "k"), help="S_k(n)/n^2 integral via Faulhaber forms"),
    "cor-5.2": Claim(dv.check_sp_p, ("p",), help="p | S_p(p)"),
    "gw-power": Claim(gw.gw_power_report, ("x", "y", "n"), help="x^n + y^n expansion"),
    "gw-binet": Claim(gw.gw_binet_report, ("x", "y", "n"), help="(x^(n+1)-y^(n+1))/(x-y) expansion"),
    "gw-zero": Claim(gw.gw_zero_report, ("x", "y", "n"), help="zero-sum form with z = -(x+y)"),
    "gw-general": Claim(gw.gw_general_report, ("x", "y", "a0", "a1", "n"), {"a0": 0, "a1": 1}, "general Binet form"),
}
ALIASES = {"thm-3.1(ap)": "thm-3.1", "ap": "thm-3.1"}
PARAM_NAMES = sorted({p for c in CLAIMS.values() for p in c.params})


def expand_grid(claim: Claim, given: dict[str, list[int]]) -> list[dict[str, int]]:
    free = [p for p in claim.params if p in given]
    missing = [p for p in claim.params if p not in given and p not in claim.defaults]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join('--' + p for p in missing)}")
    rows = []
    for combo in itertools.product(*(given[p] for p in free)):
        assign = dict(zip(free, combo))
        for p in claim.params:
            if p not in assign:
                d = claim.defaults[p]
                assign[p] = d(assign) if callable(d) else d
        rows.append({p: assign[p] for p in claim.params})
    return rows


def _is_asserted(r: DivisibilityReport) -> bool:
    return bool(r.details.get("asserted", True))


def verify_exit_code(reports: Sequence[DivisibilityReport], strict: bool) -> int:
    evaluated = [r for r in reports if not r.precondition_failed and _is_asserted(r)]
    if any(not r.holds for r in evaluated):
        return EXIT_FAIL
    if strict and any(r.precondition_failed for r in reports):
        return EXIT_STRICT
    return EXIT_OK


def _params_text(params: dict[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def cmd_verify(args: argparse.Namespace, out: io.TextIOBase) -> int:
    claim_id = ALIASES.get(args.claim, args.claim)
    if claim_id not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; choose from {', '.join(CLAIMS)}")
    claim = CLAIMS[claim_id]
    given = {p: parse_range(getattr(args, p)) for p in PARAM_NAMES if getattr(args, p) is not None}
    extra = sorted(set(given) - set(claim.params))
    if extra:
        raise UsageError(f"claim {claim_id} does not take {', '.join('--' + p for p in extra)}")
    reports = [claim.run(**row) for row in expand_grid(claim, given)]
    if args.failures_only:
        shown = [r for r in reports if not r.holds]
    else:
        shown = reports
    code = verify_exit_code(reports, args.strict)
    summary = {
        "total": len(reports),
        "holds": sum(r.holds for r in reports),
        "failed": sum(1 for r in reports if not r.holds and not r.precondition_failed),
        "precondition_failed": sum(r.precondition_failed for r in reports),
        "not_asserted": sum(1 for r in reports if not _is_asserted(r)),
    }
    if args.format == "json":
        out.write(_dump_json({"claim": claim_id, "summary": summary, "reports": [r.to_json() for r in shown]}) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["claim", "params", "modulus", "residue", "predicted", "relation", "holds", "status"])
        for r in shown:
            w.writerow([
                r.claim_id, _params_text(r.params), r.modulus, r.computed_residue,
                r.predicted_residue, r.relation, str(r.holds).lower(), r.status,
            ])
    else:
        for r in shown:
            if r.precondition_failed:
                line = f"{r.claim_id} {_params_text(r.params)}: precondition-failed ({r.note})"
            else:
                mod = f" (mod {r.modulus})" if r.modulus is not None else ""
                verdict = "holds" if r.holds else "FAILS"
                if not _is_asserted(r):
                    verdict += " [not asserted]"
                line = (
                    f"{r.claim_id} {_params_text(r.params)}: {r.computed_residue} "
                    f"{'=' if r.relation == '==' else '!='} {r.predicted_residue}{mod} {verdict}"
                )
            out.write(line + "\n")
        out.write(
            f"# {summary['holds']}/{summary['total']} hold, {summary['failed']} failed, "
            f"{summary['precondition_failed']} precondition-failed\n"
        )
    return code


# -- sum ------------------------------------------------------------------

ALGO_CHOICES = [a.value for a in Algorithm] + ["all"]


def cmd_sum(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if args.n < 1 or args.k < 0:
        raise UsageError("need --n >= 1 and --k >= 0")
    if args.mod is not None and args.mod < 1:
        raise UsageError("--mod must be >= 1")
    if args.algo == "all":
        algos = [a for a in Algorithm if args.k >= 1 or not a.needs_positive_exponent]
    else:
        algos = [Algorithm(args.algo)]
        if args.k == 0 and algos[0].needs_positive_exponent:
            raise UsageError(f"algorithm {args.algo} needs --k >= 1")
    results: dict[str, int | None] = {}
    errors: dict[str, str] = {}
    for algo in algos:
        try:
            v = sum_powers(args.n, args.k, algo)
        except ArithmeticError as exc:
            results[algo.value] = None
            errors[algo.value] = str(exc)
            continue
        results[algo.value] = v % args.mod if args.mod is not None else v
    values = set(results.values())
    agree = not errors and len(values) == 1
    if args.format == "json":
        doc: dict[str, Any] = {
            "n": str(args.n),
            "k": str(args.k),
            "mod": None if args.mod is None else str(args.mod),
            "results": {a: (None if v is None else str(v)) for a, v in results.items()},
            "agree": agree,
        }
        if errors:
            doc["errors"] = errors
        out.write(_dump_json(doc) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["algorithm", "n", "k", "mod", "value"])
        for a, v in results.items():
            w.writerow([a, args.n, args.k, "" if args.mod is None else args.mod, "" if v is None else v])
    else:
        if len(algos) == 1 and not errors:
            out.write(f"{results[algos[0].value]}\n")
        else:
            width = max(len(a) for a in results)
            for a, v in results.items():
                out.write(f"{a:<{width}}  {v if v is not None else 'ERROR: ' + errors[a]}\n")
            if not agree:
                out.write("# algorithms disagree\n")
    return EXIT_OK if agree else EXIT_FAIL


# -- search ---------------------------------------------------------------


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None


def _scanned(res: dv.SearchResult) -> list[int]:
    lo, hi = res.k_range
    pool = res.candidates if res.candidates is not None else range(lo, hi + 1)
    return [k for k in pool if lo <= k <= hi and (not res.odd_only or k % 2 == 1)]


def cmd_search(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if (args.n is None) == (args.n_family is None):
        raise UsageError("give exactly one of --n or --n-family")
    if args.n is not None:
        ns = parse_range(args.n)
    else:
        a, b = parse_family(args.n_family)
        if args.range is None:
            raise UsageError("--n-family needs --range")
        ns = [a * i + b for i in parse_range(args.range)]
    if any(n < 1 for n in ns):
        raise UsageError("every n must be >= 1")
    k_lo, k_hi = parse_bounds(args.k)
    if k_lo < 1:
        raise UsageError("--k range must start at >= 1")
    candidates = parse_range(args.k_list) if args.k_list else None
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [
                dv.search_k(n, k_lo, k_hi, args.odd_only, jobs=jobs, candidates=candidates, executor=pool)
                for n in ns
            ]
    else:
        results = [dv.search_k(n, k_lo, k_hi, args.odd_only, candidates=candidates) for n in ns]

    if args.format == "json":
        out.write(_dump_json({"results": [r.to_json() for r in results]}) + "\n")
    elif args.format == "jsonl":
        for r in results:
            out.write(json.dumps(r.to_json()) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "modulus", "k", "divisible"])
        for r in results:
            passing = set(r.passing_k)
            for k in _scanned(r):
                w.writerow([r.n, r.modulus, k, int(k in passing)])
    else:
        for r in results:
            out.write(f"n={r.n} mod={r.modulus} k={r.k_range[0]}..{r.k_range[1]}: {' '.join(map(str, r.passing_k))}\n")
            if r.candidates is not None:
                failing = [k for k in _scanned(r) if k not in set(r.passing_k)]
                out.write(f"  failing: {' '.join(map(str, failing)) if failing else '(none)'}\n")
    return EXIT_OK


# -- table / poly ---------------------------------------------------------


def _frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def cmd_table(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if args.table == "bernoulli":
        if args.upto < 0:
            raise UsageError("--upto must be >= 0")
        values = bernoulli_table(args.upto, BernoulliConvention.parse(args.convention))
        rows = [[str(i), _frac(v)] for i, v in enumerate(values)]
        if args.format == "json":
            out.write(_dump_json({"convention": args.convention, "values": [r[1] for r in rows]}) + "\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["index", "value"])
            w.writerows(rows)
        else:
            for i, v in rows:
                out.write(f"B_{i} = {v}\n")
    else:
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        tri = [list(stirling2_row(i)) for i in range(args.n + 1)]
        if args.format == "json":
            out.write(_dump_json({"rows": [[str(v) for v in row] for row in tri]}) + "\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["n", "k", "value"])
            for i, row in enumerate(tri):
                for k, v in enumerate(row):
                    w.writerow([i, k, v])
        else:
            for row in tri:
                out.write(" ".join(map(str, row)) + "\n")
    return EXIT_OK


def cmd_poly(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    poly = faulhaber_polynomial(args.k)
    if args.basis == "t":
        poly = to_triangular_basis(poly)
    if args.format == "json":
        out.write(json.dumps(poly.to_strings()) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for d, c in enumerate(poly.to_strings()):
            w.writerow([d, c])
    else:
        out.write(str(poly) + "\n")
    return EXIT_OK


# -- bench ----------------------------------------------------------------


def cmd_bench(args: argparse.Namespace, out: io.TextIOBase) -> int:
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    if any(n < 1 for n in ns) or any(k < 1 for k in ks) or args.repeat < 1:
        raise UsageError("bench needs n >= 1, k >= 1, --repeat >= 1")
    algos = list(Algorithm)
    rows = []
    ok = True
    for n in ns:
        for k in ks:
            timings = {}
            values = set()
            for algo in algos:
                best = float("inf")
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    v = sum_powers(n, k, algo)
                    best = min(best, time.perf_counter() - t0)
                values.add(v)
                timings[algo.value] = best
            agree = len(values) == 1
            ok = ok and agree
            rows.append((n, k, timings, agree))
    if args.format == "json":
        doc = [{"n": str(n), "k": str(k), "seconds": t, "agree": a} for n, k, t, a in rows]
        out.write(_dump_json(doc) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k"] + [a.value for a in algos] + ["agree"])
        for n, k, t, a in rows:
            w.writerow([n, k] + [f"{t[x.value]:.6e}" for x in algos] + [str(a).lower()])
    else:
        head = f"{'n':>6} {'k':>4} " + " ".join(f"{a.value:>11}" for a in algos)
        out.write(head + "\n")
        for n, k, t, a in rows:
            cells = " ".join(f"{t[x.value] * 1e6:>9.1f}us" for x in algos)
            out.write(f"{n:>6} {k:>4} {cells}{'' if a else '  DISAGREE'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powersums", description="Exact power sums and their divisibility.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser, extra: Sequence[str] = ()) -> None:
        p.add_argument("--format", choices=["plain", "json", "csv", *extra], default="plain")

    p = sub.add_parser("sum", help="compute S_k(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=ALGO_CHOICES, default="naive")
    p.add_argument("--mod", type=int, default=None, help="reduce the result modulo this value")
    fmt(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", help="check a divisibility claim or identity over a parameter grid")
    p.add_argument("claim", help="claim id: " + ", ".join(CLAIMS))
    for name in PARAM_NAMES:
        p.add_argument(f"--{name}", default=None, metavar="RANGE", help="value, a..b, or comma list")
    p.add_argument("--strict", action="store_true", help="exit 3 if any precondition failed")
    p.add_argument("--failures-only", action="store_true", help="only print reports that do not hold")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="find k with n^2 | S_k(n)")
    p.add_argument("--n", default=None, metavar="RANGE")
    p.add_argument("--n-family", default=None, metavar="AN+B", help="e.g. 6n+1, with --range")
    p.add_argument("--range", default=None, metavar="a..b")
    p.add_argument("--k", required=True, metavar="a..b")
    p.add_argument("--k-list", default=None, help="only test these k (comma list / ranges)")
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    fmt(p, ["jsonl"])
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="dump Bernoulli or Stirling tables")
    tsub = p.add_subparsers(dest="table", required=True)
    tb = tsub.add_parser("bernoulli")
    tb.add_argument("--upto", type=int, required=True)
    tb.add_argument("--convention", choices=["first", "second"], default="first")
    fmt(tb)
    tb.set_defaults(func=cmd_table)
    ts = tsub.add_parser("stirling2")
    ts.add_argument("--n", type=int, required=True)
    fmt(ts)
    ts.set_defaults(func=cmd_table)

    p = sub.add_parser("poly", help="Faulhaber polynomial of S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", choices=["n", "t"], default="n")
    fmt(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bench", help="time every sum_powers algorithm on an (n, k) grid")
    p.add_argument("--n", default="10,100,1000")
    p.add_argument("--k", default="5,15,30")
    p.add_argument("--repeat", type=int, default=3)
    fmt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out: io.TextIOBase | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        # basis conversion of an even exponent and similar refusals
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
