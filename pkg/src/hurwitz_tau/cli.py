"""Command line interface.

Subcommands: verify, table, walks, tau, gmatrix, chartable.  All output is
machine readable (JSON/CSV), rationals serialise as "num/den" strings and
never as floats, and identical flags plus the same --seed produce
byte-identical output.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import config, tauseries, verify
from .characters import character_table
from .groupalg import (
    WalkQuery,
    count_walks,
    mixed,
    multi_monotone,
    plain,
    strictly_monotone,
    weakly_monotone,
)
from .partitions import format_partition, parse_partition, partitions_of
from .series import monomial_label
from .twists import E, Exp, H, connection_coeffs, twist

CLI_TWISTS = {
    "exp": ("Exp", lambda cap, n: twist((Exp("q", "beta"),), (max(n, 1), cap))),
    "monotone": ("H", lambda cap, n: twist((H("z"),), (cap,))),
    "strict": ("E", lambda cap, n: twist((E("w"),), (cap,))),
    "mixed": ("Exp*H", lambda cap, n: twist((Exp("q", "beta"), H("z")), (max(n, 1), cap, cap))),
    "weakstrict": ("H*E", lambda cap, n: twist((H("z"), E("w")), (cap, cap))),
    "multi": ("E*E", lambda cap, n: twist((E("w1"), E("w2")), (cap, cap))),
}


def frac_str(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def series_json(series) -> dict:
    return {
        monomial_label(series.space.params, exps): frac_str(coeff)
        for exps, coeff in sorted(series.terms.items())
    }


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def parse_fraction_list(text: str) -> list[Fraction]:
    return [Fraction(piece) for piece in text.split(",") if piece.strip()]


def emit(payload, out_path=None):
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, nmax=args.nmax, seed=args.seed)
    failed = [r for r in results if not r.passed]
    for r in results:
        print(r.line())
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed")
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def cmd_chartable(args) -> int:
    table = character_table(args.n)
    emit(table.as_json_dict(), args.out)
    return 0


def cmd_walks(args) -> int:
    if args.kind == "mixed" and args.p is None:
        print("--kind mixed needs --p (length of the monotone prefix)", file=sys.stderr)
        return 2
    segments = {
        "plain": lambda: plain(args.steps),
        "monotone": lambda: weakly_monotone(args.steps),
        "strict": lambda: strictly_monotone(args.steps),
        "mixed": lambda: mixed(args.p, args.steps),
        "multi": lambda: multi_monotone(
            [int(x) for x in args.segments.split(",")] if args.segments else [args.steps]
        ),
    }[args.kind]()
    query = WalkQuery(
        args.n,
        parse_partition(getattr(args, "from")),
        parse_partition(args.to),
        segments,
        transitive=args.transitive,
    )
    value = count_walks(query)
    print(value)
    record = {
        "n": args.n,
        "from": format_partition(query.from_type),
        "to": format_partition(query.to_type),
        "kind": args.kind,
        "steps": [
            {"kind": seg.kind, "length": seg.length} for seg in query.segments
        ],
        "transitive": args.transitive,
        "count": str(value),
    }
    print(json.dumps(record, sort_keys=False))
    return 0


def cmd_gmatrix(args) -> int:
    label, make = CLI_TWISTS[args.twist]
    spec = make(args.cap, args.n)
    coeffs = connection_coeffs(spec, args.n)
    entries = []
    for lam in partitions_of(args.n):
        for mu in partitions_of(args.n):
            series = coeffs[(lam, mu)]
            if not series:
                continue
            entries.append(
                {
                    "from": format_partition(lam),
                    "to": format_partition(mu),
                    "series": series_json(series),
                }
            )
    emit({"n": args.n, "twist": label, "entries": entries}, args.out)
    return 0


def cmd_tau(args) -> int:
    if args.family == "hciz":
        if args.N is None or args.a is None or args.b is None:
            print("hciz needs --N, --a, --b", file=sys.stderr)
            return 2
        if args.zcap > tauseries.TAU_NMAX_CAP:
            print(f"--zcap is capped at {tauseries.TAU_NMAX_CAP}", file=sys.stderr)
            return 2
        a_vals, b_vals = parse_fraction_list(args.a), parse_fraction_list(args.b)
        t = tauseries.hciz_tau(args.N, args.zcap, args.zcap)
        series = tauseries.tau_eval(t, a_vals, b_vals)
        payload = {
            "family": "hciz",
            "N": args.N,
            "a": [frac_str(x) for x in a_vals],
            "b": [frac_str(x) for x in b_vals],
            "zcap": args.zcap,
            "series": series_json(series),
        }
        if args.check_determinant:
            det = tauseries.hciz_determinant(args.N, a_vals, b_vals, args.zcap)
            payload["determinant"] = series_json(det)
            payload["determinant_matches"] = det == series.truncate_to(det.space)
            if not payload["determinant_matches"]:
                emit(payload, args.out)
                return 1
        emit(payload, args.out)
        return 0
    if args.family == "alpha_q":
        if args.N is None or args.a is None or args.b is None or args.alpha is None:
            print("alpha_q needs --N, --alpha, --a, --b", file=sys.stderr)
            return 2
        a_vals, b_vals = parse_fraction_list(args.a), parse_fraction_list(args.b)
        if args.check_determinant:
            report = tauseries.alpha_q_determinant(
                args.N, Fraction(args.alpha), a_vals, b_vals, args.qcap
            )
            emit(report, args.out)
            return 0
        t = tauseries.alpha_q_tau(Fraction(args.alpha), args.N, min(args.qcap, 8))
        series = tauseries.tau_eval(t, a_vals, b_vals)
        emit(
            {
                "family": "alpha_q",
                "N": args.N,
                "alpha": frac_str(Fraction(args.alpha)),
                "a": [frac_str(x) for x in a_vals],
                "b": [frac_str(x) for x in b_vals],
                "qcap": args.qcap,
                "series": series_json(series),
            },
            args.out,
        )
        return 0
    print(f"unknown family {args.family}", file=sys.stderr)
    return 2


def cmd_table(args) -> int:
    kind = {"okounkov": "plain"}.get(args.family, args.family)
    if kind not in tauseries.TABLE_KINDS:
        print(f"unknown table family {args.family}", file=sys.stderr)
        return 2
    cap = args.bmax if args.bmax is not None else args.kmax
    rows = tauseries.hurwitz_table(kind, args.nmax, cap, connected=args.connected)
    if args.format == "json":
        emit(rows, args.out)
        return 0
    # CSV: flatten the step columns per kind
    step_cols = {
        "plain": ["b"],
        "monotone": ["k"],
        "strict": ["k"],
        "mixed": ["p", "k"],
        "multi": ["segments"],
    }[kind]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["n", "from", "to"] + (["k"] if step_cols == ["b"] else step_cols) + ["count"]
    writer.writerow(header)
    for row in rows:
        steps = row["steps"]
        if kind == "plain":
            step_values = [steps["b"]]
        elif kind in ("monotone", "strict"):
            step_values = [steps["k"]]
        elif kind == "mixed":
            step_values = [steps["p"], steps["k"]]
        else:
            step_values = [",".join(str(d) for d in steps["segments"])]
        writer.writerow([row["n"], row["from"], row["to"], *step_values, row["count"]])
    text = buffer.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-tau",
        description=(
            "Exact walk-counting generating functions on symmetric-group"
            " Cayley graphs; HURWITZ_MAX_N overrides the walk-size cap (<= 8)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES, nargs="?", default="all")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chartable", help="character table as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("walks", help="count constrained walks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument(
        "--kind",
        choices=("plain", "monotone", "strict", "mixed", "multi"),
        default="plain",
    )
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--p", type=int, default=None, help="monotone prefix length for --kind mixed")
    p.add_argument("--segments", default=None, help="comma-separated lengths for --kind multi")
    p.add_argument("--transitive", action="store_true")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("gmatrix", help="connection coefficients of a twist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--twist", choices=sorted(CLI_TWISTS), default="monotone")
    p.add_argument("--cap", type=int, default=config.SERIES_CAP_DEFAULT)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gmatrix)

    p = sub.add_parser("tau", help="evaluate a tau series at points")
    p.add_argument("--family", choices=("hciz", "alpha_q"), required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--a", default=None)
    p.add_argument("--b", default=None)
    p.add_argument("--zcap", type=int, default=config.SERIES_CAP_DEFAULT)
    p.add_argument("--qcap", type=int, default=5)
    p.add_argument("--check-determinant", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("table", help="walk-count tables")
    p.add_argument(
        "--family",
        choices=("okounkov", "plain", "monotone", "strict", "mixed", "multi"),
        required=True,
    )
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--bmax", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
