"""
Command-line front end.

Every subcommand is deterministic given its flags, writes either to
stdout or atomically to ``--output`` (temp file plus rename, so a
failed run leaves no partial file), and exits 0 on success, 2 on a
usage error, 1 on a verification failure or I/O problem.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import extremal, probabilities, scaling, tables, temme, verify
from .perm import Permutation, records, sample_uniform_many
from .tables import REC, SREC


def _write(document: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(document)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".recstats-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(document)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _parse_marks(text: str) -> dict[int, str]:
    marks: dict[int, str] = {}
    if not text:
        return marks
    for item in text.split(","):
        try:
            pos_text, mark = item.split(":")
            pos = int(pos_text)
        except ValueError:
            raise ValueError(f"bad mark {item!r}; expected POSITION:Y or POSITION:N") from None
        if pos in marks:
            raise ValueError(f"position {pos} marked twice")
        marks[pos] = mark.strip().upper()
    return marks


def _cmd_table(args: argparse.Namespace) -> int:
    table = tables.rec_table(args.n) if args.kind == REC else tables.srec_table(args.n)
    if args.format == "csv":
        _write(tables.table_csv(table), args.output)
    else:
        _write(tables.table_json(table) + "\n", args.output)
    return 0


def _cmd_records(args: argparse.Namespace) -> int:
    profile = records(Permutation.from_string(args.perm))
    _write(
        json.dumps(
            {"positions": list(profile.positions), "rec": profile.rec, "srec": profile.srec}
        )
        + "\n",
        args.output,
    )
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    permutations = sample_uniform_many(args.n, args.seed, args.count)
    _write("".join(f"{p}\n" for p in permutations), args.output)
    return 0


def _cmd_pattern(args: argparse.Namespace) -> int:
    spec = probabilities.PatternSpec(args.n, _parse_marks(args.marks))
    _write(probabilities.format_fraction(probabilities.pattern_probability(spec)) + "\n",
           args.output)
    return 0


def _cmd_min_product(args: argparse.Namespace) -> int:
    _write(extremal.extremal_csv([extremal.min_product(args.n, args.k)]), args.output)
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    curve = scaling.curve_samples(args.n, args.stat, args.points)
    _write(scaling.curve_csv(curve), args.output)
    return 0


def _cmd_tau(args: argparse.Namespace) -> int:
    reports = scaling.tau_series(args.stat, args.n_min, args.n_max)
    _write(scaling.tau_csv(reports), args.output)
    return 0


def _cmd_deviation(args: argparse.Namespace) -> int:
    _write(scaling.tau_csv([scaling.sup_deviation(args.n, args.stat)]), args.output)
    return 0


def _cmd_temme(args: argparse.Namespace) -> int:
    estimate = temme.temme_estimate(args.n, args.m)
    log_exact = None
    if args.compare:
        log_exact = tables.big_ln(tables.rec_table(args.n).coeffs[args.m])
    _write(temme.estimate_csv([(estimate, log_exact)]), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    return 0 if verify.run_suite(args.suite, args.max_n) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recstats",
        description="Exact and asymptotic record statistics of permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--output", "-o", help="write to this path (atomic); default stdout")
        return p

    for kind, label in ((REC, "number-of-records"), (SREC, "sum-of-record-positions")):
        p = add(f"{kind}-table", _cmd_table, f"exact {label} counts for one n")
        p.set_defaults(kind=kind)
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("records", _cmd_records, "record profile of one permutation")
    p.add_argument("--perm", required=True, help='comma-separated values, e.g. "4,7,5,1,6,8,2,3"')

    p = add("sample", _cmd_sample, "uniform random permutations, reproducible by seed")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=_positive_int, default=1)

    p = add("pattern", _cmd_pattern, "exact probability of a record/non-record pattern")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--marks", default="", help='e.g. "2:Y,5:N"; empty means unconstrained')

    p = add("min-product", _cmd_min_product, "minimum product over admissible position tuples")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)

    p = add("curve", _cmd_curve, "scaled log-count curve with its limit shape")
    p.add_argument("--stat", choices=(REC, SREC), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--points", type=_positive_int, default=None,
                   help="evenly spaced sample count; default: every breakpoint")

    p = add("tau", _cmd_tau, "sup-deviation series tau(n) over a range of n")
    p.add_argument("--stat", choices=(REC, SREC), required=True)
    p.add_argument("--n-min", type=_positive_int, required=True)
    p.add_argument("--n-max", type=_positive_int, required=True)

    p = add("deviation", _cmd_deviation, "exact sup deviation for one n")
    p.add_argument("--stat", choices=(REC, SREC), required=True)
    p.add_argument("--n", type=_positive_int, required=True)

    p = add("temme", _cmd_temme, "saddle-point estimate of c(n, m)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--compare", action="store_true",
                   help="also emit the exact log count and relative error")

    p = sub.add_parser("verify", help="run invariant suites; exit 0 iff all pass")
    p.set_defaults(handler=_cmd_verify)
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-n", type=_positive_int, default=8, dest="max_n")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
