"""Independent reference multiplier for differential testing.

``oracle_multiply`` never touches the 10x10 lookup table or the
partial-product rows that drive the main path: it scans the right
operand most significant digit first, scaling the accumulator by ten
and then adding the left operand in as many times as the digit says.
The only code shared with the main path is the exact adder and the
power-of-ten shift, so a defect in either multiplier shows up as a
disagreement instead of being reproduced on both sides.  The price is
speed (up to an order of magnitude slower per digit), which is fine
for a path that only runs during verification.
"""

from dataclasses import dataclass

from .core import DigitVector, add, format_decimal, parse_decimal, shift_pow10

#: (left, right, product) triples with known-correct products, embedded
#: as ground truth for golden_check.  The last product was frozen from
#: oracle_multiply output after cross-checking it against host integer
#: arithmetic.
GOLDEN_CASES: tuple[tuple[str, str, str], ...] = (
    ("689", "997", "686933"),
    ("9247", "9019", "83398693"),
    ("10231", "48199", "493123969"),
    ("987", "8765", "8651055"),
    ("761", "98414", "74893054"),
    ("3812", "18520", "70598240"),
    ("99410597", "89687949", "8915932553795553"),
    ("594105", "796879", "473429798295"),
)


def oracle_multiply(a: DigitVector, b: DigitVector) -> DigitVector:
    """a times b by shift-and-repeated-addition; no lookup table involved."""
    acc = [0]
    for d in b:
        acc = shift_pow10(acc, 1)
        for _ in range(d):
            acc = add(acc, a)
    return acc


@dataclass(frozen=True)
class GoldenResult:
    left: str
    right: str
    expected: str
    main_output: str
    oracle_output: str

    @property
    def ok(self) -> bool:
        return self.main_output == self.expected and self.oracle_output == self.expected

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "expected": self.expected,
            "main": self.main_output,
            "oracle": self.oracle_output,
            "ok": self.ok,
        }


@dataclass
class GoldenReport:
    results: list[GoldenResult]

    @property
    def failures(self) -> list[GoldenResult]:
        return [r for r in self.results if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def golden_check(multiply_fn=None, oracle_fn=None) -> GoldenReport:
    """Run both multipliers over the embedded known products.

    Mismatches become report entries, never exceptions, so a corrupted
    build is reported rather than crashing the check.  Both functions
    can be overridden to point the check at a deliberately broken
    implementation.
    """
    if multiply_fn is None:
        from .core import multiply as multiply_fn
    if oracle_fn is None:
        oracle_fn = oracle_multiply
    results = []
    for left, right, expected in GOLDEN_CASES:
        lv = parse_decimal(left)
        rv = parse_decimal(right)
        results.append(
            GoldenResult(
                left=left,
                right=right,
                expected=expected,
                main_output=_render(multiply_fn, lv, rv),
                oracle_output=_render(oracle_fn, lv, rv),
            )
        )
    return GoldenReport(results)


@dataclass
class SweepReport:
    max_value: int
    cases: int
    mismatches: int
    samples: list[dict]

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def exhaustive_sweep(max_value: int = 999, multiply_fn=None, oracle_fn=None,
                     keep: int = 10) -> SweepReport:
    """Compare both multipliers on every ordered pair in [0, max_value]^2.

    The default bound exercises one million cases.  The first ``keep``
    disagreements are retained verbatim for inspection.
    """
    if max_value < 0:
        raise ValueError(f"sweep bound must be non-negative: {max_value}")
    if multiply_fn is None:
        from .core import multiply as multiply_fn
    if oracle_fn is None:
        oracle_fn = oracle_multiply
    vectors = [parse_decimal(str(n)) for n in range(max_value + 1)]
    cases = 0
    mismatches = 0
    samples: list[dict] = []
    for x, xv in enumerate(vectors):
        for y, yv in enumerate(vectors):
            cases += 1
            got = multiply_fn(xv, yv)
            ref = oracle_fn(xv, yv)
            if got != ref:
                mismatches += 1
                if len(samples) < keep:
                    samples.append(
                        {
                            "left": str(x),
                            "right": str(y),
                            "main": _safe_decimal(got),
                            "oracle": _safe_decimal(ref),
                        }
                    )
    return SweepReport(max_value=max_value, cases=cases, mismatches=mismatches,
                       samples=samples)


def _render(fn, lv, rv) -> str:
    # a broken implementation must land in the report, not raise
    try:
        return _safe_decimal(fn(lv, rv))
    except Exception as exc:
        return f"<error: {exc}>"


def _safe_decimal(v) -> str:
    try:
        return format_decimal(v)
    except ValueError:
        return repr(v)
