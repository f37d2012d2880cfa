from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverhh.linalg import (
    LinearSolver,
    Matrix,
    PrimeField,
    identity_matrix,
    kernel_basis,
    mat_vec,
    matrix_from_rows,
    rank,
    rref,
    solve,
)


def test_rref_identity():
    m = identity_matrix(2)
    red, pivots, rk = rref(m)
    assert red == m and pivots == (0, 1) and rk == 2


def test_rref_zero():
    m = matrix_from_rows([[0, 0, 0]] * 3)
    red, pivots, rk = rref(m)
    assert red == m and pivots == () and rk == 0


def test_rref_rank_one():
    # hand row-reduction: second row is twice the first
    m = matrix_from_rows([[1, 2], [2, 4]])
    red, pivots, rk = rref(m)
    assert red == matrix_from_rows([[1, 2], [0, 0]])
    assert rk == 1


def test_solve_identity():
    m = identity_matrix(3)
    b = [Fraction(5), Fraction(-1), Fraction(7)]
    assert solve(m, b) == b


def test_solve_free_variable_zeroed():
    x = solve(matrix_from_rows([[1, 1]]), [2])
    assert x == [Fraction(2), Fraction(0)]


def test_solve_inconsistent():
    assert solve(matrix_from_rows([[0]]), [1]) is None


def test_kernel_of_identity_empty():
    assert kernel_basis(identity_matrix(4)) == []


def test_kernel_zero_matrix():
    vecs = kernel_basis(matrix_from_rows([[0, 0, 0], [0, 0, 0]]))
    assert len(vecs) == 3
    for i, v in enumerate(vecs):
        assert v[i] == 1 and sum(1 for c in v if c) == 1


def test_kernel_single_row():
    # hand computation: x + 2y = 0 -> (-2, 1)
    (v,) = kernel_basis(matrix_from_rows([[1, 2]]))
    assert v == [Fraction(-2), Fraction(1)]


def test_empty_matrix_allowed():
    m = Matrix(0, 3, [])
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 3


sq = st.integers(min_value=-6, max_value=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(sq, min_size=4, max_size=4), min_size=3, max_size=5))
def test_rref_idempotent_and_rank_nullity(rows):
    m = matrix_from_rows(rows)
    red, pivots, rk = rref(m)
    again, pivots2, rk2 = rref(red)
    assert again == red and rk2 == rk
    assert rk + len(kernel_basis(m)) == m.cols


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.lists(sq, min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(sq, min_size=3, max_size=3),
)
def test_solve_back_substitutes(rows, b):
    m = matrix_from_rows(rows)
    bq = [Fraction(x) for x in b]
    x = solve(m, bq)
    if x is not None:
        assert mat_vec(m, x) == bq
    for v in kernel_basis(m):
        assert all(c == 0 for c in mat_vec(m, v))


def test_linear_solver_matches_solve():
    m = matrix_from_rows([[1, 2, 0], [0, 0, 1]])
    ls = LinearSolver(m)
    assert ls.solve([Fraction(3), Fraction(4)]) == solve(m, [3, 4])
    assert LinearSolver(matrix_from_rows([[0]])).solve([Fraction(1)]) is None


def test_gf_matches_rationals_mod_p():
    p = 7
    gf = PrimeField(p)
    rows = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    mq = matrix_from_rows(rows)
    mp = matrix_from_rows(rows, field=gf)
    redq, _, rkq = rref(mq)
    redp, _, rkp = rref(mp)
    assert rkq == rkp
    for i in range(3):
        for j in range(3):
            q = redq[i, j]
            assert q.denominator % p != 0
            lifted = q.numerator * pow(q.denominator, p - 2, p)
            assert redp[i, j] == gf.from_int(lifted)


def test_prime_field_rejects_two_and_composites():
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(9)


def test_gf_division():
    gf = PrimeField(11)
    a, b = gf.from_int(5), gf.from_int(3)
    assert (a / b) * b == a
    assert 1 / b * b == gf.one()
