"""Command-line interface.

Thin client over the core package: each subcommand parses flags, calls the
library, and formats output. The same operations are exposed over HTTP by
``course_advisor.service``.

Exit codes: 0 success, 2 usage error, 3 parse/data error, 4 unknown
student, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import advisor, ingest, rules_io, synthetic
from .apriori import MiningParams, generate_rules, mine_frequent
from .errors import DataError, UnknownStudentError
from .rationals import percent_half_up

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNKNOWN_STUDENT = 4
EXIT_IO = 5


def _threshold(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"{text} is outside (0, 1]")
    return value


def _grade_threshold(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value <= 100:
        raise argparse.ArgumentTypeError(f"{text} is outside [0, 100]")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if not 1 <= bounds[0] <= bounds[1]:
        raise argparse.ArgumentTypeError(f"range {text!r} is empty or below 1")
    return bounds


def _cluster(text: str) -> synthetic.CourseCluster:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected ANCHOR:FOLLOWER[,FOLLOWER...]:BOOST, got {text!r}"
        )
    anchor, followers_text, boost_text = parts
    try:
        boost = float(boost_text)
        return synthetic.CourseCluster(anchor, tuple(followers_text.split(",")), boost)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_records(path: str) -> list[ingest.Enrollment]:
    with open(path, encoding="utf-8-sig") as handle:
        return ingest.parse_records(handle)


def _add_mining_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--min-support", type=_threshold, required=True,
                     help="minimum itemset support, a fraction in (0, 1]")
    sub.add_argument("--min-confidence", type=_threshold, required=True,
                     help="minimum rule confidence, a fraction in (0, 1]")
    sub.add_argument("--grade-threshold", type=_grade_threshold, default=50,
                     help="lowest passing grade (default 50)")
    sub.add_argument("--max-len", type=int, default=None,
                     help="optional cap on the itemset size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="course-advisor",
        description="Mine course association rules and suggest courses to students.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    mine = commands.add_parser("mine", help="mine rules from a CSV and write a rule file")
    mine.add_argument("csv", help="enrollment CSV path")
    _add_mining_flags(mine)
    mine.add_argument("--major", required=True, help="mine this major's transactions")
    mine.add_argument("--out", required=True, help="rule file to write")
    mine.set_defaults(func=cmd_mine)

    advise = commands.add_parser("advise", help="suggest courses for one student")
    advise.add_argument("csv", help="enrollment CSV path")
    advise.add_argument("--student", required=True, help="student id to advise")
    _add_mining_flags(advise)
    advise.add_argument("--top-k", type=int, default=None,
                        help="emit at most this many suggestions")
    advise.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text lines or a JSON document (default text)")
    advise.add_argument("--rules", default=None,
                        help="load pre-mined rules from this file instead of mining")
    advise.set_defaults(func=cmd_advise)

    gen = commands.add_parser("gen", help="generate a synthetic enrollment CSV")
    gen.add_argument("--out", required=True, help="CSV file to write")
    gen.add_argument("--seed", type=_seed, required=True, help="RNG seed (64-bit)")
    gen.add_argument("--students", type=int, default=100, help="number of students")
    gen.add_argument("--majors", default="CS", help="comma-separated major codes")
    gen.add_argument("--semesters", type=_int_range, default=(2, 8), metavar="LO:HI",
                     help="semesters per student (default 2:8)")
    gen.add_argument("--courses", type=_int_range, default=(3, 6), metavar="LO:HI",
                     help="courses sampled per semester (default 3:6)")
    gen.add_argument("--pool", type=int, default=40, help="course pool size per major")
    gen.add_argument("--pass-rate", type=float, default=0.85,
                     help="probability a registration passes (default 0.85)")
    gen.add_argument("--cluster", type=_cluster, action="append", default=[],
                     metavar="ANCHOR:FOLLOWERS:BOOST",
                     help="plant a co-occurrence cluster; repeatable")
    gen.set_defaults(func=cmd_gen)

    stats = commands.add_parser("stats", help="summarize an enrollment CSV")
    stats.add_argument("csv", help="enrollment CSV path")
    stats.add_argument("--grade-threshold", type=_grade_threshold, default=50,
                       help="lowest passing grade (default 50)")
    stats.add_argument("--verbose", action="store_true",
                       help="also dump every transaction with student and semester")
    stats.set_defaults(func=cmd_stats)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    return parser


def cmd_mine(args: argparse.Namespace) -> int:
    records = _read_records(args.csv)
    params = MiningParams(args.min_support, args.min_confidence, args.max_len)
    db = ingest.build_transactions(records, args.major, args.grade_threshold)
    if not db.transactions:
        print(f"warning: no transactions for major {args.major!r}", file=sys.stderr)
        fis = mine_frequent(db, params)
        rules = []
    else:
        fis = mine_frequent(db, params)
        rules = generate_rules(fis, params, len(db.transactions))
    Path(args.out).write_text(rules_io.rules_to_text(rules), encoding="utf-8")
    print(f"transactions: {len(db.transactions)}")
    print(f"items: {len(db.item_universe)}")
    if fis.levels:
        per_level = ", ".join(
            f"level {k}: {len(level)}" for k, level in enumerate(fis.levels, start=1)
        )
    else:
        per_level = "none"
    print(f"frequent itemsets: {per_level}")
    print(f"rules: {len(rules)}")
    print(f"wrote {len(rules)} rules to {args.out}")
    return EXIT_OK


def cmd_advise(args: argparse.Namespace) -> int:
    records = _read_records(args.csv)
    params = MiningParams(args.min_support, args.min_confidence, args.max_len)
    if args.rules is not None:
        with open(args.rules, encoding="utf-8") as handle:
            rules = rules_io.parse_rules_text(handle)
        report = advisor.advise_with_rules(
            records, args.student, params, rules, args.grade_threshold
        )
    else:
        report = advisor.advise(records, args.student, params, args.grade_threshold)
    suggestions = report.suggestions
    if args.top_k is not None:
        suggestions = suggestions[: max(args.top_k, 0)]
    if args.format == "structured":
        trimmed = advisor.AdviceReport(
            report.student_id, report.params, report.kept_rules, suggestions
        )
        print(json.dumps(advisor.report_to_dict(trimmed), indent=2))
    else:
        if not suggestions:
            print("no suggestions")
        for suggestion in suggestions:
            print(f"{suggestion.course_id}----{percent_half_up(suggestion.confidence)}%")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    params = synthetic.SynthParams(
        num_students=args.students,
        majors=tuple(args.majors.split(",")),
        semesters_per_student=args.semesters,
        courses_per_semester=args.courses,
        course_pool_size=args.pool,
        pass_rate=args.pass_rate,
        clusters=tuple(args.cluster),
        seed=args.seed,
    )
    records = synthetic.generate_enrollments(params)
    Path(args.out).write_text(ingest.records_to_csv(records), encoding="utf-8")
    students = len({rec.student_id for rec in records})
    print(f"wrote {len(records)} enrollments for {students} students to {args.out}")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    records = _read_records(args.csv)
    summary = ingest.summarize_dataset(records, args.grade_threshold)
    print(f"students: {summary.student_count}")
    majors = ", ".join(f"{major}: {n}" for major, n in sorted(summary.major_histogram.items()))
    print(f"majors: {majors if majors else 'none'}")
    print(f"transactions: {summary.transaction_count}")
    print(f"items: {summary.item_count}")
    lengths = ", ".join(f"{size}: {n}" for size, n in summary.length_histogram.items())
    print(f"transaction lengths: {lengths if lengths else 'none'}")
    if args.verbose:
        for major, db in summary.databases.items():
            for t in db.transactions:
                print(f"{major} {t.tid} {t.student_id} {t.semester} {','.join(t.items)}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("course_advisor.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownStudentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_STUDENT
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        # bad flag combinations caught by the library's own validation
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
