import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridmul.core import (
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
from helpers import as_int, from_int, random_vector

TABLE = build_table()

canonical_vectors = st.integers(min_value=0, max_value=10**64 - 1).map(from_int)
nonzero_vectors = st.integers(min_value=1, max_value=10**64 - 1).map(from_int)


# ---------------------------------------------------------------- table

def test_table_known_cells():
    assert TABLE[9][9] == 81
    assert TABLE[7][9] == 63


def test_table_zero_and_identity_rows():
    assert all(TABLE[0][j] == 0 for j in range(10))
    assert all(TABLE[1][j] == j for j in range(10))


def test_table_is_exactly_the_products():
    for i in range(10):
        for j in range(10):
            assert TABLE[i][j] == i * j
            assert TABLE[i][j] == TABLE[j][i]


# ---------------------------------------------------------------- parsing

def test_parse_samples():
    assert parse_decimal("10231") == [1, 0, 2, 3, 1]
    assert parse_decimal("000") == [0]
    assert parse_decimal("89687949") == [8, 9, 6, 8, 7, 9, 4, 9]


def test_parse_accepts_plus_sign():
    assert parse_decimal("+42") == [4, 2]


def test_parse_strips_leading_zeros():
    assert parse_decimal("000689") == [6, 8, 9]


@pytest.mark.parametrize(
    "text,position",
    [("12a3", 2), (" 12", 0), ("1 2", 1), ("-5", 0), ("1_000", 1)],
)
def test_parse_reports_offending_position(text, position):
    with pytest.raises(ParseError, match=f"position {position}"):
        parse_decimal(text)


def test_parse_rejects_empty_and_bare_sign():
    with pytest.raises(ParseError):
        parse_decimal("")
    with pytest.raises(ParseError):
        parse_decimal("+")


def test_format_samples():
    assert format_decimal([6, 8, 6, 9, 3, 3]) == "686933"
    assert format_decimal([0]) == "0"
    assert format_decimal([1, 0, 0]) == "100"


@pytest.mark.parametrize("bad", [[0, 1], [], [3, 10], [-1], [3.0, 1]])
def test_format_rejects_non_canonical(bad):
    with pytest.raises(ValueError):
        format_decimal(bad)


@given(canonical_vectors)
def test_parse_format_round_trip(v):
    assert parse_decimal(format_decimal(v)) == v


@given(st.integers(min_value=0, max_value=10**64 - 1))
def test_format_parse_round_trip_on_numerals(n):
    assert format_decimal(parse_decimal(str(n))) == str(n)


# ---------------------------------------------------------------- normalize

def test_normalize_samples():
    assert normalize([0, 0, 4, 2]) == [4, 2]
    assert normalize([0, 0, 0]) == [0]
    assert normalize([3, 9, 8, 4, 3, 9, 5]) == [3, 9, 8, 4, 3, 9, 5]


def test_normalize_rejects_out_of_range():
    with pytest.raises(ValueError):
        normalize([3, 10])
    with pytest.raises(ValueError):
        normalize([-1])
    with pytest.raises(ValueError):
        normalize([])


# ---------------------------------------------------------------- shift

def test_shift_samples():
    assert shift_pow10([1, 2, 3], 2) == [1, 2, 3, 0, 0]
    assert shift_pow10([0], 7) == [0]
    assert shift_pow10([9], 0) == [9]


def test_shift_rejects_negative():
    with pytest.raises(ValueError):
        shift_pow10([1], -1)


@given(canonical_vectors, st.integers(min_value=0, max_value=50))
def test_shift_matches_integer_scaling(v, k):
    assert as_int(shift_pow10(v, k)) == as_int(v) * 10**k


# ---------------------------------------------------------------- add

def test_add_samples():
    assert add([0], [5, 7]) == [5, 7]
    assert add([9, 9, 9], [1]) == [1, 0, 0, 0]
    # the two shifted partial sums of 594105 * 796879
    assert add(
        [4, 7, 3, 3, 4, 6, 1, 2, 6, 0, 0, 0], [8, 3, 6, 7, 2, 2, 9, 5]
    ) == [4, 7, 3, 4, 2, 9, 7, 9, 8, 2, 9, 5]


@given(canonical_vectors, canonical_vectors)
def test_add_matches_integer_addition(x, y):
    assert as_int(add(x, y)) == as_int(x) + as_int(y)


@given(canonical_vectors, canonical_vectors)
def test_add_commutes(x, y):
    assert add(x, y) == add(y, x)


@given(canonical_vectors, canonical_vectors)
def test_add_length_bound(x, y):
    assert len(add(x, y)) <= max(len(x), len(y)) + 1


# ---------------------------------------------------------------- rows

def test_row_multiply_samples():
    assert row_multiply(5, [7, 9, 6, 8, 7, 9], TABLE) == [3, 9, 8, 4, 3, 9, 5]
    assert row_multiply(0, [4, 8, 1, 9, 9], TABLE) == [0, 0, 0, 0, 0, 0]
    assert row_multiply(1, [4, 8, 1, 9, 9], TABLE) == [0, 4, 8, 1, 9, 9]


@given(st.integers(min_value=0, max_value=9), nonzero_vectors)
def test_row_reads_as_digit_times_operand(d, b):
    row = row_multiply(d, b, TABLE)
    assert len(row) == len(b) + 1
    assert as_int(row) == d * as_int(b)


@given(st.integers(min_value=0, max_value=9), nonzero_vectors)
def test_row_cell_bounds(d, b):
    row = row_multiply(d, b, TABLE)
    assert 0 <= row[0] <= 8
    assert all(0 <= cell <= 9 for cell in row[1:])


def test_partial_matrix_sample_rows():
    matrix = compute_partial_matrix([1, 0, 2, 3, 1], [4, 8, 1, 9, 9], TABLE)
    assert len(matrix) == 5
    assert matrix[0] == [0, 4, 8, 1, 9, 9]
    assert matrix[1] == [0, 0, 0, 0, 0, 0]
    assert matrix[4] == [0, 4, 8, 1, 9, 9]


def test_partial_matrix_single_digits():
    assert compute_partial_matrix([9], [9], TABLE) == [[8, 1]]


def test_partial_matrix_rows_are_independent():
    matrix = compute_partial_matrix([5, 9, 4, 1, 0, 5], [7, 9, 6, 8, 7, 9], TABLE)
    assert matrix[0] == [3, 9, 8, 4, 3, 9, 5]
    assert matrix[0] == matrix[5]  # same digit, same row, no cross-row carry
    assert matrix[4] == [0] * 7


def test_row_value_samples():
    assert row_value([3, 9, 8, 4, 3, 9, 5]) == [3, 9, 8, 4, 3, 9, 5]
    assert row_value([0, 0, 0, 0, 0, 0]) == [0]
    assert row_value([0, 4, 8, 1, 9, 9]) == [4, 8, 1, 9, 9]


# ---------------------------------------------------------------- multiply

KNOWN_PRODUCTS = [
    ("689", "997", "686933"),
    ("9247", "9019", "83398693"),
    ("10231", "48199", "493123969"),
    ("987", "8765", "8651055"),
    ("761", "98414", "74893054"),
    ("3812", "18520", "70598240"),
    ("99410597", "89687949", "8915932553795553"),
    ("594105", "796879", "473429798295"),
]


@pytest.mark.parametrize("left,right,product", KNOWN_PRODUCTS)
def test_multiply_known_products(left, right, product):
    assert format_decimal(multiply(parse_decimal(left), parse_decimal(right))) == product


@given(canonical_vectors)
def test_multiply_identities(v):
    assert multiply(v, [1]) == v
    assert multiply([1], v) == v
    assert multiply(v, [0]) == [0]
    assert multiply([0], v) == [0]


@given(canonical_vectors, canonical_vectors)
def test_multiply_matches_integer_product(x, y):
    assert as_int(multiply(x, y)) == as_int(x) * as_int(y)


@given(canonical_vectors, canonical_vectors)
def test_multiply_commutes(x, y):
    assert multiply(x, y) == multiply(y, x)


@given(nonzero_vectors, nonzero_vectors)
def test_multiply_length_bound(x, y):
    assert len(multiply(x, y)) in (len(x) + len(y) - 1, len(x) + len(y))


@given(canonical_vectors, st.integers(min_value=0, max_value=30))
def test_multiply_by_power_of_ten_is_shift(v, k):
    power = parse_decimal("1" + "0" * k)
    assert multiply(v, power) == shift_pow10(v, k)


@given(canonical_vectors, canonical_vectors, canonical_vectors)
def test_multiply_distributes_over_add(a, b, c):
    assert multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c))


def test_multiply_deterministic_across_calls():
    rng = random.Random(20260809)
    for _ in range(25):
        x = random_vector(rng)
        y = random_vector(rng)
        first = multiply(x, y)
        assert multiply(x, y) == first
        assert multiply(x, y) == first


def test_multiply_accepts_table_override():
    bad = [list(row) for row in TABLE]
    bad[7][9] = 0  # single corrupted cell
    bad = tuple(tuple(row) for row in bad)
    good = multiply(parse_decimal("79"), parse_decimal("9"))
    assert multiply(parse_decimal("79"), parse_decimal("9"), table=bad) != good
