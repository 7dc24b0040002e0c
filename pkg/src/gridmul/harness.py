"""Accuracy experiments, answer scoring, and the quadratic-time check.

Corpus generation is fully reproducible: every task derives its own
splitmix64 stream from (seed, shape index, task index), so reports come
out identical however the tasks are scheduled.  Ground truth always
comes from the reference multiplier, never from the path under test,
which is what lets the experiment catch bugs in the main path.
"""

import statistics
import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from .core import DigitVector, ParseError, format_decimal, multiply, parse_decimal
from .oracle import oracle_multiply
from .rng import SplitMix64, derive_seed, draw_operand

#: The six operand-shape classes of the standard accuracy experiment.
SHAPE_GRID = ((3, 3), (4, 4), (5, 5), (3, 4), (3, 5), (4, 5))

#: How many mismatching tasks are retained verbatim, per shape.
MAX_RETAINED_FAILURES = 10

DEFAULT_BENCH_SIZES = (64, 128, 256, 512, 1024, 2048, 4096)
DEFAULT_SLOPE_BAND = (1.7, 2.3)


@dataclass(frozen=True)
class ShapeSpec:
    """A task class: digit counts of both operands plus how many tasks."""

    left_digits: int
    right_digits: int
    count: int

    def __post_init__(self):
        if self.left_digits < 1 or self.right_digits < 1:
            raise ValueError(f"operands need at least one digit: {self.label}")
        if self.count < 1:
            raise ValueError(f"shape {self.label} needs a positive task count: {self.count}")

    @property
    def label(self) -> str:
        return f"{self.left_digits}x{self.right_digits}"


def standard_shapes(count: int) -> list[ShapeSpec]:
    """The six-shape grid, each shape carrying the same task count."""
    return [ShapeSpec(left, right, count) for left, right in SHAPE_GRID]


@dataclass
class TaskRecord:
    """One multiplication problem; expected always comes from the oracle."""

    left: DigitVector
    right: DigitVector
    expected: DigitVector
    claimed: DigitVector | None = None


def iter_tasks(shape: ShapeSpec, seed: int, shape_index: int = 0):
    """Yield the deterministic task stream for one shape."""
    for task_index in range(shape.count):
        gen = SplitMix64(derive_seed(seed, shape_index, task_index))
        left = draw_operand(gen, shape.left_digits)
        right = draw_operand(gen, shape.right_digits)
        yield TaskRecord(left=left, right=right, expected=oracle_multiply(left, right))


def generate_tasks(shape: ShapeSpec, seed: int, shape_index: int = 0) -> list[TaskRecord]:
    """Materialized task list for one shape.

    shape_index selects the substream; callers running several shapes
    in one experiment pass each shape's position so the streams never
    overlap.
    """
    return list(iter_tasks(shape, seed, shape_index))


def task_line(task: TaskRecord) -> str:
    """One task in the tab-separated format, expected product last."""
    return "\t".join(
        (
            format_decimal(task.left),
            format_decimal(task.right),
            format_decimal(task.expected),
        )
    )


@dataclass
class ShapeResult:
    shape: ShapeSpec
    matches: int
    wall_time: float
    failures: list[dict] = field(default_factory=list)

    @property
    def accuracy(self) -> float:
        return self.matches / self.shape.count


@dataclass
class ExperimentReport:
    seed: int
    shapes: list[ShapeResult]
    wall_time: float

    @property
    def total_tasks(self) -> int:
        return sum(r.shape.count for r in self.shapes)

    @property
    def total_matches(self) -> int:
        return sum(r.matches for r in self.shapes)

    @property
    def overall_accuracy(self) -> float:
        return self.total_matches / self.total_tasks

    def to_dict(self) -> dict:
        """Stable report schema; "timing" holds the only nondeterministic fields."""
        return {
            "seed": self.seed,
            "shapes": [
                {
                    "left_digits": r.shape.left_digits,
                    "right_digits": r.shape.right_digits,
                    "count": r.shape.count,
                    "matches": r.matches,
                    "accuracy": r.accuracy,
                }
                for r in self.shapes
            ],
            "overall_accuracy": self.overall_accuracy,
            "failures": [{"shape": r.shape.label, "cases": r.failures} for r in self.shapes],
            "timing": {
                "total_seconds": self.wall_time,
                "per_shape_seconds": [r.wall_time for r in self.shapes],
            },
        }


def run_experiment(shapes, seed: int, multiply_fn=multiply) -> ExperimentReport:
    """Accuracy of the path under test against reference products.

    Every generated task is multiplied with multiply_fn and compared to
    its oracle-produced expected value.  The first few mismatches per
    shape are kept verbatim; everything else is counting.
    """
    shapes = list(shapes)
    if not shapes:
        raise ValueError("need at least one shape")
    t_run = time.perf_counter()
    results = []
    for shape_index, shape in enumerate(shapes):
        t_shape = time.perf_counter()
        matches = 0
        failures: list[dict] = []
        for task in iter_tasks(shape, seed, shape_index):
            got = multiply_fn(task.left, task.right)
            if got == task.expected:
                matches += 1
            elif len(failures) < MAX_RETAINED_FAILURES:
                failures.append(
                    {
                        "left": format_decimal(task.left),
                        "right": format_decimal(task.right),
                        "expected": format_decimal(task.expected),
                        "got": _safe_decimal(got),
                    }
                )
        results.append(
            ShapeResult(
                shape=shape,
                matches=matches,
                wall_time=time.perf_counter() - t_shape,
                failures=failures,
            )
        )
    return ExperimentReport(seed=seed, shapes=results, wall_time=time.perf_counter() - t_run)


@dataclass(frozen=True)
class DigitDiff:
    """Where two right-aligned numerals disagree.

    positions are 0-based offsets from the most significant digit of
    the longer numeral, after the shorter one is left-padded with
    zeros.  Equal numerals have no positions and no length mismatch.
    """

    positions: frozenset[int]
    length_mismatch: bool

    @property
    def equal(self) -> bool:
        return not self.positions and not self.length_mismatch

    def to_dict(self) -> dict:
        return {
            "positions": sorted(self.positions),
            "length_mismatch": self.length_mismatch,
        }


def digit_diff(correct: DigitVector, claimed: DigitVector) -> DigitDiff:
    """Differing digit positions of two right-aligned canonical numerals."""
    width = max(len(correct), len(claimed))
    a = [0] * (width - len(correct)) + correct
    b = [0] * (width - len(claimed)) + claimed
    return DigitDiff(
        positions=frozenset(i for i in range(width) if a[i] != b[i]),
        length_mismatch=len(correct) != len(claimed),
    )


#: (line number, raw tab-separated fields) as read from a claim file.
ClaimRow = tuple[int, list[str]]


def read_claim_file(path) -> list[ClaimRow]:
    """Rows of the tab-separated task format.

    One task per line, ``left TAB right TAB claimed``.  Blank lines are
    skipped, as are comment lines whose first non-space character is
    '#'.  Field-count and numeral problems are deliberately left in so
    score_answers can verdict them.
    """
    rows: list[ClaimRow] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\r\n")
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            rows.append((lineno, line.split("\t")))
    return rows


@dataclass
class ScoreVerdict:
    line: int
    status: str  # "ok" | "wrong" | "malformed"
    left: str
    right: str
    claimed: str
    expected: str | None = None
    diff: DigitDiff | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "status": self.status,
            "left": self.left,
            "right": self.right,
            "claimed": self.claimed,
            "expected": self.expected,
            "diff": self.diff.to_dict() if self.diff is not None else None,
            "error": self.error,
        }


@dataclass
class ScoreResult:
    verdicts: list[ScoreVerdict]

    @property
    def total(self) -> int:
        return len(self.verdicts)

    @property
    def correct(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "ok")

    @property
    def wrong(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "wrong")

    @property
    def malformed(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "malformed")

    @property
    def accuracy(self) -> float | None:
        """Fraction of rows judged correct; None when nothing was scored."""
        if not self.verdicts:
            return None
        return self.correct / self.total

    def to_dict(self) -> dict:
        return {
            "verdicts": [v.to_dict() for v in self.verdicts],
            "summary": {
                "total": self.total,
                "ok": self.correct,
                "wrong": self.wrong,
                "malformed": self.malformed,
                "accuracy": self.accuracy,
            },
        }


def score_answers(rows) -> ScoreResult:
    """Judge claimed products against reference products.

    rows are (line number, fields) pairs as produced by
    read_claim_file.  A row with the wrong field count, or any field
    that fails to parse as a numeral, is verdicted malformed rather
    than raising; malformed rows never count as correct.
    """
    verdicts = []
    for lineno, fields in rows:
        padded = list(fields[:3]) + [""] * (3 - len(fields))
        left_text, right_text, claimed_text = padded
        if len(fields) != 3:
            verdicts.append(
                ScoreVerdict(
                    line=lineno,
                    status="malformed",
                    left=left_text,
                    right=right_text,
                    claimed=claimed_text,
                    error=f"expected 3 tab-separated fields, got {len(fields)}",
                )
            )
            continue
        try:
            left = parse_decimal(left_text)
            right = parse_decimal(right_text)
        except ParseError as exc:
            verdicts.append(
                ScoreVerdict(
                    line=lineno,
                    status="malformed",
                    left=left_text,
                    right=right_text,
                    claimed=claimed_text,
                    error=f"operand: {exc}",
                )
            )
            continue
        expected = oracle_multiply(left, right)
        try:
            claimed = parse_decimal(claimed_text)
        except ParseError as exc:
            verdicts.append(
                ScoreVerdict(
                    line=lineno,
                    status="malformed",
                    left=left_text,
                    right=right_text,
                    claimed=claimed_text,
                    expected=format_decimal(expected),
                    error=f"claimed: {exc}",
                )
            )
            continue
        if claimed == expected:
            verdicts.append(
                ScoreVerdict(
                    line=lineno,
                    status="ok",
                    left=left_text,
                    right=right_text,
                    claimed=claimed_text,
                    expected=format_decimal(expected),
                )
            )
        else:
            verdicts.append(
                ScoreVerdict(
                    line=lineno,
                    status="wrong",
                    left=left_text,
                    right=right_text,
                    claimed=claimed_text,
                    expected=format_decimal(expected),
                    diff=digit_diff(expected, claimed),
                )
            )
    return ScoreResult(verdicts)


@dataclass
class TimingResult:
    seed: int
    reps: int
    points: list[tuple[int, float]]  # (size, median seconds), sizes kept in the fit
    dropped: list[int]
    slope: float

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "reps": self.reps,
            "sizes": [size for size, _ in self.points],
            "seconds": [seconds for _, seconds in self.points],
            "dropped": list(self.dropped),
            "slope": self.slope,
        }


def run_timing(sizes=DEFAULT_BENCH_SIZES, reps: int = 3, seed: int = 1,
               multiply_fn=multiply) -> TimingResult:
    """Median multiply wall time per operand size, plus the log-log slope.

    Every repetition times multiply_fn on a fresh random pair of
    size-digit operands drawn from the stream derive_seed(seed, size,
    rep).  Sizes whose median lands at the timer floor are dropped from
    the fit with a warning.  A quadratic implementation fits a slope
    close to 2.
    """
    sizes = [int(size) for size in sizes]
    if len(sizes) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes must be strictly increasing: {sizes}")
    if sizes[0] < 8:
        raise ValueError(f"smallest size must be at least 8: {sizes[0]}")
    if reps < 3:
        raise ValueError(f"need at least three repetitions: {reps}")

    floor = 10 * time.get_clock_info("perf_counter").resolution
    points: list[tuple[int, float]] = []
    dropped: list[int] = []
    for size in sizes:
        samples = []
        for rep in range(reps):
            gen = SplitMix64(derive_seed(seed, size, rep))
            left = draw_operand(gen, size)
            right = draw_operand(gen, size)
            t0 = time.perf_counter()
            multiply_fn(left, right)
            samples.append(time.perf_counter() - t0)
        median = statistics.median(samples)
        if median <= floor:
            warnings.warn(
                f"size {size}: median {median:.3e}s is at the timer floor; dropped from fit"
            )
            dropped.append(size)
        else:
            points.append((size, median))
    if len(points) < 2:
        raise ValueError("too few measurable sizes to fit a slope")
    xs = np.log([size for size, _ in points])
    ys = np.log([seconds for _, seconds in points])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return TimingResult(seed=seed, reps=reps, points=points, dropped=dropped, slope=slope)


def slope_in_band(slope: float, band=DEFAULT_SLOPE_BAND) -> bool:
    lo, hi = band
    return lo <= slope <= hi


def _safe_decimal(v) -> str:
    # fault-injected multipliers can emit non-canonical junk; report it as-is
    try:
        return format_decimal(v)
    except ValueError:
        return repr(v)
