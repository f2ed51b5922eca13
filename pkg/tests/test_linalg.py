import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsep.errors import (
    ArithmeticOverflowError,
    InvalidArgumentError,
    ParseError,
    UnimodularityError,
    ZeroRankError,
)
from gsep.linalg import (
    IntMatrix,
    det,
    format_matrix,
    inverse_unimodular,
    is_totally_unimodular,
    is_weakly_unimodular,
    parse_matrix,
    rank,
    reduce_full_rank,
    solve,
    solve_integral,
    standard_form,
    tu_witness,
    wu_witness,
)
from helpers import cofactor_det, fraction_rank

small_ints = st.integers(min_value=-4, max_value=4)


def square(k):
    return st.lists(st.lists(small_ints, min_size=k, max_size=k), min_size=k, max_size=k)


@given(st.integers(1, 4).flatmap(square))
def test_det_matches_cofactor_expansion(rows):
    assert det(IntMatrix.from_rows(rows)) == cofactor_det(rows)


@given(st.integers(1, 4).flatmap(lambda r: st.lists(
    st.lists(small_ints, min_size=5, max_size=5), min_size=r, max_size=r)))
def test_rank_matches_fraction_elimination(rows):
    assert rank(IntMatrix.from_rows(rows)) == fraction_rank(rows)


def test_det_overflow_is_reported():
    big = 2 ** 40
    m = IntMatrix.from_rows([[big, 1], [1, big]])
    with pytest.raises(ArithmeticOverflowError):
        det(m)


def test_entries_outside_int64_rejected():
    with pytest.raises(ArithmeticOverflowError):
        IntMatrix.from_rows([[2 ** 63]])


def test_matrix_basics():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.T.to_rows() == [[1, 4], [2, 5], [3, 6]]
    assert m.col(1) == (2, 5)
    assert (m @ IntMatrix.identity(3)) == m
    assert m.apply((1, 0, -1)) == (-2, -2)
    assert m.select_columns([2, 0]).to_rows() == [[3, 1], [6, 4]]


def test_wu_witness_reports_bad_minor():
    bad = IntMatrix.from_rows([[1, 1], [-1, 1]])
    assert not is_weakly_unimodular(bad)
    (rows, cols), d = wu_witness(bad)
    assert (rows, cols) == ((0, 1), (0, 1))
    assert d == 2


def test_weakly_but_not_totally_unimodular():
    m = IntMatrix.from_rows([[2, 1]])
    # maximal minors are 2 and 1: not WU; [[1, 2]] scaled the same way
    assert not is_weakly_unimodular(m)
    m2 = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert det(m2) == 2
    assert tu_witness(m2) is not None


def test_wu_uses_maximal_minors_of_size_min_dimension():
    # a 2x3 matrix with a 1x1 entry of 2 can still be weakly unimodular
    m = IntMatrix.from_rows([[1, 2, 1], [0, 1, 1]])
    minors = [det(m.select_columns(c)) for c in ((0, 1), (0, 2), (1, 2))]
    assert all(x in (-1, 0, 1) for x in minors)
    assert is_weakly_unimodular(m)
    assert not is_totally_unimodular(m)


def test_solve_and_integral_solve():
    m = IntMatrix.from_rows([[2, 0], [0, 1]])
    assert solve(m, [1, 3]) == (pytest.approx(0.5), 3)
    assert solve_integral(m, [1, 3]) is None
    assert solve_integral(m, [2, 3]) == (1, 3)
    tall = IntMatrix.from_rows([[1], [1]])
    assert solve(tall, [1, 2]) is None
    assert solve(tall, [2, 2]) == (2,)
    with pytest.raises(InvalidArgumentError):
        solve(IntMatrix.from_rows([[1, 1], [1, 1]]), [1, 2])


def test_inverse_unimodular_roundtrip():
    m = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert m @ inverse_unimodular(m) == IntMatrix.identity(3)


def test_standard_form_running_example():
    m = IntMatrix.from_rows([[1, 0, 0, -1, 1], [0, 1, 0, -1, 1], [0, 0, 1, -1, 0]])
    n_inv, perm, std = standard_form(m, [1, 2, 4])
    assert std.submatrix(range(3), range(3)) == IntMatrix.identity(3)
    assert n_inv @ m.select_columns(perm) == std
    assert is_totally_unimodular(std)


def test_reduce_full_rank_drops_dependent_rows():
    m = IntMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 2]])
    red, perm = reduce_full_rank(m)
    assert red.rows == 2
    assert red.submatrix(range(2), range(2)) == IntMatrix.identity(2)
    assert rank(red) == 2


def test_reduce_full_rank_errors():
    with pytest.raises(ZeroRankError):
        reduce_full_rank(IntMatrix.from_rows([[0, 0]]))
    with pytest.raises(UnimodularityError):
        reduce_full_rank(IntMatrix.from_rows([[2, 2], [1, 1]]))


def test_parse_and_format_roundtrip():
    text = "# comment\n2 3\n1 0 -1\n0 1 1\n"
    m = parse_matrix(text)
    assert m.to_rows() == [[1, 0, -1], [0, 1, 1]]
    assert parse_matrix(format_matrix(m)) == m


@pytest.mark.parametrize("text", ["", "2 2\n1 0\n", "1 2\n1 x\n", "1 2\n1 0 0\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


@settings(max_examples=40)
@given(st.randoms(use_true_random=False))
def test_tu_check_matches_brute_force_minors(rnd: random.Random):
    rows = [[rnd.choice((-1, 0, 0, 1)) for _ in range(4)] for _ in range(3)]
    from itertools import combinations

    expected = all(
        cofactor_det([[rows[i][j] for j in cs] for i in rs]) in (-1, 0, 1)
        for k in range(1, 4)
        for rs in combinations(range(3), k)
        for cs in combinations(range(4), k)
    )
    assert is_totally_unimodular(IntMatrix.from_rows(rows)) == expected
