"""Command-line verification harness.

Subcommands cover every suite: sequence generation (seq), identity
verification (verify identities), interpretation oracles (verify oracles),
asymptotic ratio tables (ratio), circle-method reconstruction (circle), and
the arc/eta lemma checks (lemmas).

Exit codes: 0 success, 1 mathematical assertion failure, 2 usage/range error.
PENTAVERIFY_THREADS caps the worker threads used by grid sweeps; output row
order is the deterministic input order regardless.
"""

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

from . import asymptotics as asy
from . import qseries as qs
from . import reports
from . import truncated as tr
from .errors import (
    CapExceeded,
    DomainError,
    NoConvergence,
    RegimeViolation,
    TableTooSmall,
)
from .partitions import Family, build_table
from .truncated import SumFamily

ETA_CHECK_TAUS = (1j, 0.5j, 0.25j, 0.1 + 0.3j)
ETA_FULL_TOL = 1e-6
DEFECT_GROWTH_FACTOR = 3.0  # "bounded": no growth beyond 3x the smallest-n defect


def thread_count() -> int:
    try:
        t = int(os.environ.get("PENTAVERIFY_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, t)


def _pmap(fn, items):
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


@contextmanager
def _open_out(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit(args, config, header, rows):
    with _open_out(args.out) as out:
        reports.emit(args.format, config, header, rows, out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_seq(args) -> int:
    family = Family(args.family)
    table = build_table(family, args.max)
    _emit(args, {"command": "seq", "family": family.value, "max": args.max},
          ["n", "value"], list(table.rows()))
    return 0


def cmd_verify_identities(args) -> int:
    header = ["identity", "k", "degree", "status", "first_bad_exponent", "lhs", "rhs"]
    rows = []
    failures = 0
    for name in qs.IDENTITY_NAMES:
        for k in range(1, args.kmax + 1):
            gap = qs.check_identity(name, k, args.degree)
            if gap is None:
                rows.append([name, k, args.degree, "ok", None, None, None])
            else:
                failures += 1
                e, lc, rc = gap
                rows.append([name, k, args.degree, "mismatch", e, lc, rc])
                print(f"identity {name} k={k}: first mismatch at q^{e}: "
                      f"lhs={lc} rhs={rc}", file=sys.stderr)
    if args.format == "text":
        with _open_out(args.out) as out:
            for name, k, deg, status, e, lc, rc in rows:
                line = f"identity {name} k={k} degree={deg}: {status.upper()}"
                if status == "mismatch":
                    line += f" at q^{e}: lhs={lc} rhs={rc}"
                out.write(line + "\n")
    else:
        _emit(args, {"command": "verify-identities", "kmax": args.kmax,
                     "degree": args.degree}, header, rows)
    return 1 if failures else 0


def cmd_verify_oracles(args) -> int:
    family = SumFamily(args.family)
    base = {SumFamily.MK: Family.P, SumFamily.MKBAR: Family.OVERP,
            SumFamily.MPK: Family.POD}[family]
    table = build_table(base, args.ncap)
    counts = tr.oracle_grid(family, args.ncap, args.kmax)  # raises CapExceeded
    header = ["family", "n", "k", "formula", "oracle", "match"]
    rows = []
    failures = 0
    for n in range(1, args.ncap + 1):
        for k in range(1, args.kmax + 1):
            formula = tr.evaluate(family, n, k, table)
            oracle = counts[(n, k)]
            ok = formula == oracle
            failures += not ok
            rows.append([family.value, n, k, formula, oracle, ok])
    if args.format == "text":
        with _open_out(args.out) as out:
            if failures:
                for row in rows:
                    if not row[5]:
                        out.write(f"family {row[0]} n={row[1]} k={row[2]}: "
                                  f"formula={row[3]} oracle={row[4]} MISMATCH\n")
            out.write(f"family {family.value} n<=({args.ncap}) k<=({args.kmax}): "
                      f"{len(rows)} pairs, {failures} mismatches\n")
    else:
        _emit(args, {"command": "verify-oracles", "family": family.value,
                     "ncap": args.ncap, "kmax": args.kmax}, header, rows)
    return 1 if failures else 0


def cmd_ratio(args) -> int:
    family = SumFamily(args.family)
    base = {SumFamily.MK: Family.P, SumFamily.MKBAR: Family.OVERP,
            SumFamily.MPK: Family.POD}[family]
    table = build_table(base, max(args.n))
    rows_r = _pmap(lambda nk: asy.ratio_row(family, nk[0], nk[1], table),
                   [(n, k) for n in args.n for k in args.k])
    header = ["family", "n", "k", "ln_exact", "ln_main", "rel_dev", "in_regime"]
    rows = [[r.family, r.n, r.k, r.ln_exact, r.ln_main, r.rel_dev, r.in_regime]
            for r in rows_r]
    _emit(args, {"command": "ratio", "family": family.value, "n": args.n,
                 "k": args.k}, header, rows)
    if args.plot:
        from . import plots
        plots.save_ratio_figure(rows_r, args.plot)
    if args.assert_converge:
        for k in args.k:
            devs = [abs(r.rel_dev) for r in rows_r if r.k == k]
            if any(math.isnan(d) for d in devs) or any(
                    a <= b for a, b in zip(devs, devs[1:])):
                print(f"convergence assertion failed for k={k}: "
                      f"|rel_dev| not strictly decreasing along n={args.n}",
                      file=sys.stderr)
                return 1
    return 0


def cmd_circle(args) -> int:
    if args.n > asy.CIRCLE_N_CAP:
        print(f"error: circle method supports n <= {asy.CIRCLE_N_CAP}",
              file=sys.stderr)
        return 2
    result = asy.circle_method_report(args.n, args.k, tol=args.tol)
    table = build_table(Family.P, args.n)
    exact = tr.mk(args.n, args.k, table)
    match = result.rounded == exact
    header = ["n", "k", "integral", "imag_residual", "rounded", "exact", "match"]
    row = [args.n, args.k, result.integral, result.imag_residual,
           result.rounded, exact, match]
    if args.format == "text":
        with _open_out(args.out) as out:
            out.write(f"integral={reports.format_cell(result.integral)} "
                      f"rounded={result.rounded} exact={exact} "
                      f"match={'true' if match else 'false'}\n")
    else:
        _emit(args, {"command": "circle", "n": args.n, "k": args.k,
                     "tol": args.tol}, header, [row])
    return 0 if match else 1


def cmd_lemmas(args) -> int:
    pairs = [(n, k) for n in args.n for k in args.k]
    if not args.force:
        for n, k in pairs:
            if not asy.regime_check(n, k, SumFamily.MK):
                print(f"error: (n={n}, k={k}) violates k^8 <= n; "
                      f"use --force to override", file=sys.stderr)
                return 2

    def one(pair):
        n, k = pair
        return (asy.lemma_near1_check(n, k, prod_tol=args.tol, force=args.force),
                asy.lemma_away1_check(n, k, prod_tol=args.tol, force=args.force))

    sweeps = _pmap(one, pairs)
    near = [s[0] for s in sweeps]
    away = [s[1] for s in sweeps]
    etas = [asy.eta_inversion_check(t, prod_tol=args.tol) for t in ETA_CHECK_TAUS]

    header = ["check", "n", "k", "re_tau", "im_tau", "defect", "bound", "ok"]
    rows = []
    ok_all = True
    for group in (near, away):
        for k in args.k:
            defects = {r.n: r.defect for r in group if r.k == k}
            base = defects[min(defects)]
            bound = DEFECT_GROWTH_FACTOR * base
            for r in (x for x in group if x.k == k):
                ok = math.isfinite(r.defect) and r.defect <= bound
                ok_all &= ok
                rows.append([r.kind, r.n, r.k, None, None, r.defect, bound, ok])
    for r in etas:
        ok = r.defect_full < ETA_FULL_TOL and r.defect_leading <= r.leading_bound
        ok_all &= ok
        rows.append(["eta", None, None, r.tau.real, r.tau.imag,
                     r.defect_full, ETA_FULL_TOL, ok])
    _emit(args, {"command": "lemmas", "n": args.n, "k": args.k,
                 "force": args.force}, header, rows)
    if args.plot:
        from . import plots
        plots.save_lemma_figure(near + away, args.plot)
    if not ok_all:
        print("lemma boundedness assertions failed", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_format(p, default="csv", choices=("csv", "json")):
    p.add_argument("--format", choices=choices, default=default,
                   help=f"output format (default {default})")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write the report to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentaverify",
        description="Exact and asymptotic verification of truncated "
                    "pentagonal-type partition sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="emit a base sequence table")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--max", type=int, required=True, help="largest index")
    _add_format(p)
    p.set_defaults(func=cmd_seq)

    v = sub.add_parser("verify", help="coefficientwise and combinatorial checks")
    vsub = v.add_subparsers(dest="verify_what", required=True)

    p = vsub.add_parser("identities", help="generating-function identities")
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--degree", type=int, default=200, help="truncation order")
    _add_format(p, default="text", choices=("text", "csv", "json"))
    p.set_defaults(func=cmd_verify_identities)

    p = vsub.add_parser("oracles", help="formula vs. brute-force counts")
    p.add_argument("--family", choices=[f.value for f in SumFamily], required=True)
    p.add_argument("--ncap", type=int, default=25)
    p.add_argument("--kmax", type=int, default=4)
    _add_format(p, default="text", choices=("text", "csv", "json"))
    p.set_defaults(func=cmd_verify_oracles)

    p = sub.add_parser("ratio", help="exact values vs. asymptotic main terms")
    p.add_argument("--family", choices=[f.value for f in SumFamily], required=True)
    p.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...")
    p.add_argument("--k", type=_int_list, default=[1], metavar="K1,K2,...")
    p.add_argument("--assert-converge", action="store_true",
                   help="exit 1 unless |rel_dev| strictly decreases along n")
    p.add_argument("--plot", metavar="PATH", default=None,
                   help="also render a convergence figure to PATH")
    _add_format(p)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("circle", help="coefficient reconstruction by contour quadrature")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_format(p, default="text", choices=("text", "csv", "json"))
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("lemmas", help="major/minor-arc and eta-inversion checks")
    p.add_argument("--n", type=_int_list, default=[400, 1600, 6400])
    p.add_argument("--k", type=_int_list, default=[1, 2])
    p.add_argument("--tol", type=float, default=asy.PROD_TOL,
                   help="infinite-product truncation tolerance")
    p.add_argument("--force", action="store_true",
                   help="run outside the k^8 <= n regime")
    p.add_argument("--plot", metavar="PATH", default=None,
                   help="also render a defect figure to PATH")
    _add_format(p)
    p.set_defaults(func=cmd_lemmas)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, RegimeViolation, TableTooSmall, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
