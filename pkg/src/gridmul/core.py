"""Exact decimal long multiplication on digit vectors.

A number is a list of base-10 digits, most significant first.  The
canonical form has no leading zeros, except that zero itself is exactly
``[0]``.  All arithmetic happens digit by digit, the way the grid
method is worked by hand:

* single-digit products come from a precomputed 10x10 lookup table;
* each digit of the left operand contributes one row of partial
  products, stored as a carry cell followed by the digits of
  ``digit * right_operand`` (the carry cell never exceeds 8, because
  the largest cell product plus an incoming carry is 81 + 8 = 89);
* rows are scaled by appending zeros (the exact power-of-ten shift)
  and folded together with the exact digit adder.

No intermediate value is ever wider than two digits, so operands of
arbitrary length multiply exactly.  Every function is pure; values can
be shared freely across threads.
"""

DigitVector = list[int]
MultiplicationTable = tuple[tuple[int, ...], ...]


class ParseError(ValueError):
    """A numeral string that cannot be read as a digit vector."""


def build_table() -> MultiplicationTable:
    """The 10x10 single-digit product table; cell [i][j] holds i*j."""
    return tuple(tuple(i * j for j in range(10)) for i in range(10))


_TABLE = build_table()


def parse_decimal(text: str) -> DigitVector:
    """Read an ASCII numeral, optionally '+'-prefixed, into canonical form.

    Leading zeros are stripped ("000" parses to [0]).  Anything that is
    not a digit, including whitespace and '-', raises ParseError naming
    the offending position.
    """
    start = 1 if text[:1] == "+" else 0
    if len(text) == start:
        raise ParseError("numeral has a sign but no digits" if start else "empty numeral")
    digits = []
    for pos in range(start, len(text)):
        value = ord(text[pos]) - 48
        if not 0 <= value <= 9:
            raise ParseError(f"invalid character {text[pos]!r} at position {pos}")
        digits.append(value)
    return normalize(digits)


def format_decimal(v: DigitVector) -> str:
    """Render a canonical digit vector as a plain decimal numeral."""
    if not _is_canonical(v):
        raise ValueError(f"not a canonical digit vector: {v!r}")
    return "".join(map(str, v))


def normalize(raw) -> DigitVector:
    """Copy a raw digit sequence into canonical form.

    Leading zeros are stripped; an all-zero sequence collapses to [0].
    Elements outside [0, 9] are rejected.
    """
    digits = list(raw)
    if not digits:
        raise ValueError("empty digit sequence")
    for d in digits:
        if not isinstance(d, int) or not 0 <= d <= 9:
            raise ValueError(f"digit out of range: {d!r}")
    i = 0
    last = len(digits) - 1
    while i < last and digits[i] == 0:
        i += 1
    return digits[i:]


def shift_pow10(v: DigitVector, k: int) -> DigitVector:
    """v times 10**k, realized by appending k zero digits; [0] shifts to [0]."""
    if k < 0:
        raise ValueError(f"negative shift: {k}")
    if v == [0]:
        return [0]
    return v + [0] * k


def add(x: DigitVector, y: DigitVector) -> DigitVector:
    """Exact sum of two canonical digit vectors."""
    if len(x) < len(y):
        x, y = y, x
    out = []
    push = out.append
    carry = 0
    i = len(x) - 1
    j = len(y) - 1
    while j >= 0:
        s = x[i] + y[j] + carry
        if s >= 10:
            s -= 10
            carry = 1
        else:
            carry = 0
        push(s)
        i -= 1
        j -= 1
    while i >= 0 and carry:
        s = x[i] + 1
        if s == 10:
            s = 0
        else:
            carry = 0
        push(s)
        i -= 1
    if carry:
        push(1)
    while i >= 0:
        push(x[i])
        i -= 1
    out.reverse()
    return out


def row_multiply(d: int, b: DigitVector, table: MultiplicationTable) -> list[int]:
    """One partial-product row: the carry cell, then the digits of d*b.

    b is scanned least significant digit first with a running carry;
    whatever carry is left over lands in cell 0.  Read as a decimal
    number, the row equals d*b.
    """
    lookup = table[d]
    row = [0] * (len(b) + 1)
    carry = 0
    for j in range(len(b) - 1, -1, -1):
        carry, row[j + 1] = divmod(lookup[b[j]] + carry, 10)
    row[0] = carry
    return row


def compute_partial_matrix(
    a: DigitVector, b: DigitVector, table: MultiplicationTable
) -> list[list[int]]:
    """One row per digit of a, in digit order; carries never cross rows."""
    return [row_multiply(d, b, table) for d in a]


def row_value(row) -> DigitVector:
    """The number a row stands for: its cells read as digits, normalized."""
    i = 0
    last = len(row) - 1
    while i < last and row[i] == 0:
        i += 1
    return list(row[i:])


def multiply(
    a: DigitVector, b: DigitVector, table: MultiplicationTable | None = None
) -> DigitVector:
    """Exact product of two canonical digit vectors.

    Row i of the partial-product matrix is worth
    ``row_value(row) * 10**(len(a) - 1 - i)``; the shifted row values
    are summed with the exact adder.  For nonzero operands the result
    has len(a)+len(b) or len(a)+len(b)-1 digits.

    table overrides the digit-product lookup (fault-injection hook for
    the test suite); by default the cached correct table is used.
    """
    if a == [0] or b == [0]:
        return [0]
    if table is None:
        table = _TABLE
    result = [0]
    top = len(a) - 1
    for i, row in enumerate(compute_partial_matrix(a, b, table)):
        result = add(result, shift_pow10(row_value(row), top - i))
    return result


def _is_canonical(v) -> bool:
    if not isinstance(v, list) or not v:
        return False
    for d in v:
        if not isinstance(d, int) or not 0 <= d <= 9:
            return False
    return len(v) == 1 or v[0] != 0
