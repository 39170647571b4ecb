from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troplink.linalg import RationalMatrix, integer_rank, nullspace, primitive, rank, solve


def naive_rank(rows):
    """Textbook Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    rk, ncols = 0, len(a[0]) if a else 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[rk], a[p] = a[p], a[rk]
        for i in range(len(a)):
            if i != rk and a[i][c] != 0:
                f = a[i][c] / a[rk][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_rank_examples():
    assert rank(RationalMatrix.zeros(3, 3)) == 0
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix([[1, 2], [2, 4]])) == 1


def test_rank_with_fractions():
    assert rank(RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1


def test_primitive_examples():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((0, 5)) == (0, 1)
    assert primitive((7,)) == (1,)
    with pytest.raises(ValueError, match="zero vector has no primitive form"):
        primitive((0, 0))


@given(matrices)
def test_rank_matches_naive_elimination(rows):
    assert rank(RationalMatrix(rows)) == naive_rank(rows)


@given(matrices)
def test_rank_of_transpose(rows):
    m = RationalMatrix(rows)
    assert rank(m) == rank(m.transpose()) <= min(m.shape)


@given(matrices, matrices)
def test_block_diagonal_rank_is_additive(a, b):
    ca, cb = len(a[0]), len(b[0])
    block = [r + [0] * cb for r in a] + [[0] * ca + r for r in b]
    assert rank(RationalMatrix(block)) == rank(RationalMatrix(a)) + rank(RationalMatrix(b))


@given(matrices)
def test_sparse_rank_ignores_row_order(rows):
    sparse = [{j: v for j, v in enumerate(r) if v} for r in rows]
    assert integer_rank(sparse) == integer_rank(sparse[::-1])


@given(matrices)
def test_nullspace_is_annihilated(rows):
    ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - naive_rank(rows)
    for v in basis:
        assert all(sum(a * x for a, x in zip(r, v)) == 0 for r in rows)


def test_solve_consistent_and_not():
    cols = [(1, 0, 1), (0, 1, 1)]
    x = solve(cols, (2, 3, 5))
    assert x == [2, 3]
    assert solve(cols, (1, 1, 0)) is None


def test_matrix_product_and_identity():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert (m @ RationalMatrix.identity(2)).rows == m.rows
    assert (m @ m).rows == ((7, 10), (15, 22))
