"""Command-line front end.

Subcommands: mul, verify, experiment, score, bench, gen.  Exit codes
are uniform: 0 success, 1 verification or benchmark failure, 2 usage
or input error.  Every subcommand accepts --json for machine-readable
output and --out to write to a file instead of stdout; nothing reads
the network or touches files not named on the command line.
"""

import argparse
import json
import sys

from .core import ParseError, format_decimal, multiply, parse_decimal


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def _seed_value(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer seed: {text!r}")


def _shape_list(text: str) -> list[tuple[int, int]]:
    shapes = []
    for item in text.split(","):
        left, sep, right = item.partition("x")
        if not sep or not left.isdigit() or not right.isdigit():
            raise argparse.ArgumentTypeError(f"bad shape {item!r}, expected LxR like 3x5")
        shapes.append((int(left), int(right)))
    if not shapes:
        raise argparse.ArgumentTypeError("empty shape list")
    return shapes


def _size_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}, expected like 64,128,256")


def _band(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"bad band {text!r}, expected lo,hi")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad band {text!r}, expected lo,hi")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"band is inverted: {text!r}")
    return lo, hi


def _emit(text: str, out_path) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_mul(args) -> int:
    left = parse_decimal(args.left)
    right = parse_decimal(args.right)
    product = format_decimal(multiply(left, right))
    if args.json:
        text = json.dumps(
            {
                "left": format_decimal(left),
                "right": format_decimal(right),
                "product": product,
            }
        )
    else:
        text = product
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    from .oracle import exhaustive_sweep, golden_check

    golden = golden_check()
    sweep = exhaustive_sweep(args.max)
    ok = golden.ok and sweep.ok
    if args.json:
        payload = {
            "golden": [r.to_dict() for r in golden.results],
            "sweep": {
                "max": sweep.max_value,
                "cases": sweep.cases,
                "mismatches": sweep.mismatches,
                "samples": sweep.samples,
            },
            "ok": ok,
        }
        text = json.dumps(payload, indent=2)
    else:
        lines = []
        for r in golden.results:
            if r.ok:
                lines.append(f"ok   {r.left} x {r.right} = {r.expected}")
            else:
                lines.append(
                    f"FAIL {r.left} x {r.right}: expected {r.expected}, "
                    f"main {r.main_output}, reference {r.oracle_output}"
                )
        lines.append(f"{sweep.cases - sweep.mismatches}/{sweep.cases} ok "
                     f"(all pairs up to {sweep.max_value})")
        for sample in sweep.samples:
            lines.append(
                f"MISMATCH {sample['left']} x {sample['right']}: "
                f"main {sample['main']}, reference {sample['oracle']}"
            )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if ok else 1


def _build_shapes(args):
    from .harness import ShapeSpec, standard_shapes

    if args.shapes:
        return [ShapeSpec(left, right, args.count) for left, right in args.shapes]
    return standard_shapes(args.count)


def _cmd_experiment(args) -> int:
    from .harness import run_experiment

    report = run_experiment(_build_shapes(args), args.seed)
    if args.plot:
        from .plots import plot_accuracy

        plot_accuracy(report, args.plot)
    if args.json:
        text = json.dumps(report.to_dict(), indent=2)
    else:
        lines = []
        for r in report.shapes:
            lines.append(
                f"shape {r.shape.label}: {r.matches}/{r.shape.count} "
                f"accuracy {r.accuracy:.6f} ({r.wall_time:.2f}s)"
            )
            for case in r.failures:
                lines.append(
                    f"  mismatch {case['left']} x {case['right']}: "
                    f"expected {case['expected']}, got {case['got']}"
                )
        lines.append(
            f"overall: {report.total_matches}/{report.total_tasks} "
            f"accuracy {report.overall_accuracy:.6f} "
            f"({report.wall_time:.2f}s, seed {report.seed})"
        )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if report.overall_accuracy == 1.0 else 1


def _cmd_score(args) -> int:
    from .harness import read_claim_file, score_answers

    try:
        rows = read_claim_file(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = score_answers(rows)
    if args.json:
        text = json.dumps(result.to_dict(), indent=2)
    else:
        lines = []
        for v in result.verdicts:
            if v.status == "ok":
                lines.append(f"line {v.line}: OK        {v.left} x {v.right} = {v.claimed}")
            elif v.status == "wrong":
                positions = ",".join(str(p) for p in sorted(v.diff.positions))
                note = f"digits differ at {positions}" if positions else "digit positions equal"
                if v.diff.length_mismatch:
                    note += ", lengths differ"
                lines.append(
                    f"line {v.line}: WRONG     {v.left} x {v.right}: "
                    f"claimed {v.claimed}, expected {v.expected}, {note}"
                )
            else:
                lines.append(f"line {v.line}: MALFORMED {v.error}")
        if result.total:
            lines.append(
                f"summary: {result.total} scored: {result.correct} ok, "
                f"{result.wrong} wrong, {result.malformed} malformed; "
                f"accuracy {result.accuracy:.4f}"
            )
        else:
            lines.append("summary: 0 scored: accuracy n/a")
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _cmd_bench(args) -> int:
    from .harness import DEFAULT_BENCH_SIZES, DEFAULT_SLOPE_BAND, run_timing, slope_in_band

    sizes = args.sizes if args.sizes is not None else DEFAULT_BENCH_SIZES
    band = args.band if args.band is not None else DEFAULT_SLOPE_BAND
    result = run_timing(sizes=sizes, reps=args.reps, seed=args.seed)
    ok = slope_in_band(result.slope, band)
    if args.plot:
        from .plots import plot_timing

        plot_timing(result, args.plot)
    if args.json:
        payload = result.to_dict()
        payload["band"] = list(band)
        payload["ok"] = ok
        text = json.dumps(payload, indent=2)
    else:
        lines = ["size\tmedian_seconds"]
        for size, seconds in result.points:
            lines.append(f"{size}\t{seconds:.6f}")
        if result.dropped:
            lines.append(f"dropped\t{','.join(str(s) for s in result.dropped)}")
        lines.append(f"slope\t{result.slope:.4f}")
        lines.append(f"band\t{band[0]:g}..{band[1]:g}\t{'ok' if ok else 'VIOLATED'}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    from .harness import iter_tasks, task_line

    shapes = _build_shapes(args)
    if args.json:
        tasks = []
        for shape_index, shape in enumerate(shapes):
            for task in iter_tasks(shape, args.seed, shape_index):
                tasks.append(
                    {
                        "left": format_decimal(task.left),
                        "right": format_decimal(task.right),
                        "expected": format_decimal(task.expected),
                    }
                )
        _emit(json.dumps(tasks, indent=2), args.out)
        return 0
    handle = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        shape_labels = ",".join(s.label for s in shapes)
        handle.write(f"# left\tright\texpected  (seed {args.seed}, shapes {shape_labels}, "
                     f"count {args.count} per shape)\n")
        for shape_index, shape in enumerate(shapes):
            for task in iter_tasks(shape, args.seed, shape_index):
                handle.write(task_line(task))
                handle.write("\n")
    finally:
        if handle is not sys.stdout:
            handle.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridmul",
        description="Exact long multiplication on decimal digit vectors, "
        "with verification, experiments, scoring, and benchmarks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p_mul = sub.add_parser("mul", parents=[common], help="multiply two numerals exactly")
    p_mul.add_argument("left")
    p_mul.add_argument("right")
    p_mul.set_defaults(func=_cmd_mul)

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="golden known products plus an exhaustive sweep against the reference multiplier",
    )
    p_verify.add_argument(
        "--max",
        type=_positive_int,
        default=999,
        help="sweep every pair in [0, MAX]^2 (default 999: one million cases)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_exp = sub.add_parser(
        "experiment",
        parents=[common],
        help="randomized accuracy experiment against the reference multiplier",
    )
    p_exp.add_argument(
        "--shapes",
        type=_shape_list,
        default=None,
        metavar="LxR[,LxR...]",
        help="operand shapes (default: the six-shape grid 3x3,4x4,5x5,3x4,3x5,4x5)",
    )
    p_exp.add_argument(
        "--count",
        type=_positive_int,
        default=200_000,
        help="tasks per shape (default 200000; use 1000 for a desk-scale run)",
    )
    p_exp.add_argument("--seed", type=_seed_value, default=1, help="corpus seed (default 1)")
    p_exp.add_argument("--plot", metavar="PATH", help="render an accuracy chart to PATH")
    p_exp.set_defaults(func=_cmd_experiment)

    p_score = sub.add_parser(
        "score",
        parents=[common],
        help="judge claimed products from a tab-separated file (left, right, claimed)",
    )
    p_score.add_argument("file", help="task file; blank lines ignored, '#' starts a comment")
    p_score.set_defaults(func=_cmd_score)

    p_bench = sub.add_parser(
        "bench",
        parents=[common],
        help="time multiply on square operand pairs and fit the log-log slope",
    )
    p_bench.add_argument(
        "--sizes",
        type=_size_list,
        default=None,
        metavar="N[,N...]",
        help="operand digit counts, strictly increasing, each >= 8 "
        "(default 64,128,...,4096)",
    )
    p_bench.add_argument("--reps", type=_positive_int, default=3,
                         help="repetitions per size, at least 3 (default 3)")
    p_bench.add_argument("--seed", type=_seed_value, default=1, help="operand seed (default 1)")
    p_bench.add_argument(
        "--band",
        type=_band,
        default=None,
        metavar="LO,HI",
        help="acceptable slope band (default 1.7,2.3)",
    )
    p_bench.add_argument("--plot", metavar="PATH", help="render a log-log timing plot to PATH")
    p_bench.set_defaults(func=_cmd_bench)

    p_gen = sub.add_parser(
        "gen",
        parents=[common],
        help="emit a task corpus with expected products in the tab-separated format",
    )
    p_gen.add_argument(
        "--shapes",
        type=_shape_list,
        default=None,
        metavar="LxR[,LxR...]",
        help="operand shapes (default: the six-shape grid)",
    )
    p_gen.add_argument("--count", type=_positive_int, default=1000,
                       help="tasks per shape (default 1000)")
    p_gen.add_argument("--seed", type=_seed_value, default=1, help="corpus seed (default 1)")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
