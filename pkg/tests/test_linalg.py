import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khtwist.linalg import (
    SparseIntMatrix,
    determinant,
    matrix_rank,
    rank_dense_fraction,
    smith_normal_form,
)


def test_zero_matrix():
    assert matrix_rank(SparseIntMatrix.zero(3, 3)) == 0


def test_identity():
    assert matrix_rank(SparseIntMatrix.identity(4)) == 4


def test_rank_deficient():
    m = SparseIntMatrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert matrix_rank(m) == 2
    assert rank_dense_fraction(m) == 2


def test_empty_shapes():
    assert matrix_rank(SparseIntMatrix.zero(0, 5)) == 0
    assert matrix_rank(SparseIntMatrix.zero(5, 0)) == 0


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_rank_matches_fraction_oracle(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(1, 9), rng.randint(1, 9)
    density = rng.choice([0.2, 0.4, 0.8])
    dense = [
        [rng.choice([-2, -1, 1, 1, -1, 3]) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]
    m = SparseIntMatrix.from_dense(dense)
    assert matrix_rank(m) == rank_dense_fraction(m)


def test_mul_and_sub():
    a = SparseIntMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseIntMatrix.from_dense([[1, 0], [3, 1]])
    assert a.mul(b).to_dense() == [[7, 2], [3, 1]]
    assert a.sub(a).is_zero()


def test_mul_shape_mismatch():
    with pytest.raises(ValueError):
        SparseIntMatrix.zero(2, 3).mul(SparseIntMatrix.zero(2, 3))


def test_transpose_rank_invariance():
    m = SparseIntMatrix.from_dense([[1, 0, 2], [0, 1, 1]])
    assert matrix_rank(m) == matrix_rank(m.transpose()) == 2


def test_determinant():
    m = SparseIntMatrix.from_dense([[2, 1], [1, 1]])
    assert determinant(m) == 1
    m = SparseIntMatrix.from_dense([[0, 1], [1, 0]])
    assert determinant(m) == -1
    m = SparseIntMatrix.from_dense([[1, 2], [2, 4]])
    assert determinant(m) == 0


def test_smith_normal_form_diagonal():
    m = SparseIntMatrix.from_dense([[2, 0], [0, 6]])
    assert smith_normal_form(m) == [2, 6]


def test_smith_normal_form_divisibility():
    m = SparseIntMatrix.from_dense([[2, 0], [0, 3]])
    assert smith_normal_form(m) == [1, 6]


def test_smith_normal_form_rank():
    m = SparseIntMatrix.from_dense([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    factors = smith_normal_form(m)
    assert len(factors) == matrix_rank(m) == 2
    assert factors[0] == 1 and factors[1] == 3
