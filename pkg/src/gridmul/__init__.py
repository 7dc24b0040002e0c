"""Exact decimal long multiplication with a differential-testing harness.

The core multiplies numbers represented as big-endian digit vectors
using the hand grid method: a 10x10 lookup table for single-digit
products, one carry-prefixed partial-product row per left-operand
digit, and exact power-of-ten shifts plus digit-wise addition to
recombine the rows.  An algorithmically independent reference
multiplier, a seeded experiment harness, an answer scorer, and a
timing benchmark sit on top.
"""

from .core import (
    DigitVector,
    MultiplicationTable,
    ParseError,
    add,
    build_table,
    compute_partial_matrix,
    format_decimal,
    multiply,
    normalize,
    parse_decimal,
    row_multiply,
    row_value,
    shift_pow10,
)
from .harness import (
    DEFAULT_BENCH_SIZES,
    DEFAULT_SLOPE_BAND,
    MAX_RETAINED_FAILURES,
    SHAPE_GRID,
    DigitDiff,
    ExperimentReport,
    ScoreResult,
    ScoreVerdict,
    ShapeResult,
    ShapeSpec,
    TaskRecord,
    TimingResult,
    digit_diff,
    generate_tasks,
    iter_tasks,
    read_claim_file,
    run_experiment,
    run_timing,
    score_answers,
    slope_in_band,
    standard_shapes,
    task_line,
)
from .oracle import (
    GOLDEN_CASES,
    GoldenReport,
    GoldenResult,
    SweepReport,
    exhaustive_sweep,
    golden_check,
    oracle_multiply,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BENCH_SIZES",
    "DEFAULT_SLOPE_BAND",
    "DigitDiff",
    "DigitVector",
    "ExperimentReport",
    "GOLDEN_CASES",
    "GoldenReport",
    "GoldenResult",
    "MAX_RETAINED_FAILURES",
    "MultiplicationTable",
    "ParseError",
    "SHAPE_GRID",
    "ScoreResult",
    "ScoreVerdict",
    "ShapeResult",
    "ShapeSpec",
    "SweepReport",
    "TaskRecord",
    "TimingResult",
    "add",
    "build_table",
    "compute_partial_matrix",
    "digit_diff",
    "exhaustive_sweep",
    "format_decimal",
    "generate_tasks",
    "golden_check",
    "iter_tasks",
    "multiply",
    "normalize",
    "oracle_multiply",
    "parse_decimal",
    "read_claim_file",
    "row_multiply",
    "row_value",
    "run_experiment",
    "run_timing",
    "score_answers",
    "shift_pow10",
    "slope_in_band",
    "standard_shapes",
    "task_line",
    "__version__",
]
