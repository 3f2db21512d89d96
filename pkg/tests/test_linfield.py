import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoveylab.errors import MalformedInputError
from hoveylab.linfield import Mat, PrimeField, rank_kernel, solve_linear

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def all_vectors(field, n):
    for tup in itertools.product(range(field.p), repeat=n):
        yield Mat(field, np.array(tup, dtype=np.int64).reshape(n, 1))


def test_prime_field_validation():
    for bad in (0, 1, 4, 6, 253, 257, 2.0, "2"):
        with pytest.raises(MalformedInputError):
            PrimeField(bad)
    assert PrimeField(251).p == 251


def test_field_inverse():
    for p in (2, 3, 5, 251):
        f = PrimeField(p)
        for a in range(1, min(p, 40)):
            assert (a * f.inv(a)) % p == 1


def test_rank_kernel_identity_f2():
    rank, ker = rank_kernel(Mat.identity(F2, 2))
    assert rank == 2 and ker.cols == 0


def test_rank_kernel_zero_1x1_f3():
    rank, ker = rank_kernel(Mat.zeros(F3, 1, 1))
    assert rank == 0
    assert ker.cols == 1 and ker.a.tolist() == [[1]]


def test_rank_kernel_ones_f2_against_enumeration():
    m = Mat.from_rows(F2, [[1, 1], [1, 1]])
    rank, ker = rank_kernel(m)
    # oracle: try all 4 vectors over F2
    null = [v for v in all_vectors(F2, 2) if (m @ v).is_zero()]
    assert rank == 1
    assert ker.cols == 1
    assert len(null) == 2  # zero vector and (1,1)^T
    assert ker.a[:, 0].tolist() == [1, 1]


def test_solve_identity():
    b = Mat.from_rows(F5, [[3], [4]])
    assert solve_linear(Mat.identity(F5, 2), b) == b


def test_solve_zero_matrix_nonzero_rhs_absent():
    assert solve_linear(Mat.zeros(F3, 2, 2), Mat.from_rows(F3, [[1], [0]])) is None


def test_solve_underdetermined_f2_in_enumerated_solution_set():
    m = Mat.from_rows(F2, [[1, 1]])
    b = Mat.zeros(F2, 1, 1)
    x = solve_linear(m, b)
    solutions = [v.a[:, 0].tolist() for v in all_vectors(F2, 2) if (m @ v) == b]
    assert x is not None and x.a[:, 0].tolist() in solutions


def test_solve_shape_mismatch():
    with pytest.raises(MalformedInputError):
        solve_linear(Mat.identity(F2, 2), Mat.zeros(F2, 3, 1))


def test_zero_shape_edge_cases():
    m = Mat.zeros(F2, 0, 3)
    rank, ker = rank_kernel(m)
    assert rank == 0 and ker.cols == 3
    m2 = Mat.zeros(F2, 3, 0)
    rank2, ker2 = rank_kernel(m2)
    assert rank2 == 0 and ker2.cols == 0
    assert solve_linear(m2, Mat.zeros(F2, 3, 2)) is not None


@st.composite
def random_mat(draw, max_dim=5):
    p = draw(st.sampled_from([2, 3, 5]))
    rows = draw(st.integers(min_value=0, max_value=max_dim))
    cols = draw(st.integers(min_value=0, max_value=max_dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    arr = np.array(entries, dtype=np.int64).reshape(rows, cols)
    return Mat(PrimeField(p), arr)


@settings(max_examples=120, deadline=None)
@given(random_mat())
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@settings(max_examples=120, deadline=None)
@given(random_mat())
def test_kernel_basis_properties(m):
    rank, ker = rank_kernel(m)
    assert rank + ker.cols == m.cols
    if ker.cols:
        assert (m @ ker).is_zero()
        assert ker.rank() == ker.cols  # columns independent


@settings(max_examples=120, deadline=None)
@given(random_mat(max_dim=4), st.data())
def test_solve_absent_iff_rank_jump(m, data):
    p = m.field.p
    b_entries = data.draw(
        st.lists(st.integers(min_value=0, max_value=p - 1), min_size=m.rows, max_size=m.rows)
    )
    b = Mat(m.field, np.array(b_entries, dtype=np.int64).reshape(m.rows, 1))
    x = solve_linear(m, b)
    jump = m.hstack(b).rank() > m.rank()
    assert (x is None) == jump


def test_inverse_and_column_space():
    m = Mat.from_rows(F3, [[1, 2], [2, 2]])
    inv = m.inverse()
    assert inv is not None and (m @ inv) == Mat.identity(F3, 2)
    singular = Mat.from_rows(F3, [[1, 2], [2, 1]])  # det = -3 = 0 mod 3
    assert singular.rank() == 1
    assert singular.inverse() is None
    assert singular.column_space_basis().cols == 1
