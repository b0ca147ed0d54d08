from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fraction_rank, leibniz_det, minor_gcd_invariants
from toric_origami.errors import DimensionError
from toric_origami.exact_linalg import (determinant, ext_gcd, in_row_space,
                                        positively_spans, rank, smith_normal_form,
                                        solve_rational)


def matrices(max_rows=3, max_cols=3, lo=-12, hi=12, square=False):
    def build(shape):
        r, c = shape
        return st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                        min_size=r, max_size=r)
    if square:
        return st.integers(1, max_rows).flatmap(lambda n: build((n, n)))
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(build)


def test_determinant_examples():
    assert determinant([[1, 0], [-1, -2]]) == -2
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1


def test_determinant_big_entries_stay_exact():
    m = [[10**30 + 1, 7], [3, 10**30 - 1]]
    assert determinant(m) == (10**30 + 1) * (10**30 - 1) - 21


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionError):
        determinant([[1, 2, 3], [4, 5, 6]])


@given(matrices(max_rows=4, square=True))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz_det(m)


@given(matrices(max_rows=5, max_cols=5, lo=-4, hi=4))
def test_rank_matches_fraction_elimination(m):
    assert rank(m) == fraction_rank(m)


def test_solve_rational():
    assert solve_rational([[2, 1], [1, 3]], [1, 2]) == [Fraction(1, 5), Fraction(3, 5)]
    assert solve_rational([[1, 2], [2, 4]], [1, 2]) is None


@given(matrices(max_rows=3, square=True), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_solve_rational_solves(a, b):
    b = b[:len(a)]
    x = solve_rational(a, b)
    if leibniz_det(a) == 0:
        assert x is None
    else:
        assert [sum(Fraction(c) * xi for c, xi in zip(row, x)) for row in a] == b


def test_smith_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[-1], [1]]) == [1]


@settings(max_examples=1000, deadline=None)
@given(matrices(lo=-20, hi=20))
def test_smith_normal_form_minor_gcd_oracle(m):
    d = smith_normal_form(m)
    assert d == minor_gcd_invariants(m)
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert len(d) == rank(m)


def test_in_row_space():
    assert in_row_space([[1, 0, 1], [0, 1, 1]], [2, 3, 5])
    assert not in_row_space([[1, 0, 1], [0, 1, 1]], [0, 0, 1])
    assert in_row_space([], [0, 0])
    assert not in_row_space([], [0, 1])


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd(a, b):
    g, x, y = ext_gcd(a, b)
    assert a * x + b * y == g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_positively_spans():
    assert positively_spans([(1, 0), (0, 1), (-1, -1)], 2)
    assert not positively_spans([(1, 0), (0, 1)], 2)
    assert not positively_spans([(1, 0), (-1, 0)], 2)
    assert positively_spans([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)], 3)
