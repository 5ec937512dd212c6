"""Tests for F_p linear algebra."""

import numpy as np
import pytest

from chuk_semifield.errors import ConsistencyError, ParameterError
from chuk_semifield.linalg import (
    batch_inverse,
    batch_rank,
    coordinates_in_span,
    inv_table,
    inverse_mod_p,
    left_null_space_mod_p,
    matrices_from_indices,
    null_space_mod_p,
    rank_mod_p,
    row_reduce_mod_p,
    same_row_space,
)


class TestRank:
    """Tests for batched rank."""

    def test_inv_table(self):
        assert inv_table(5).tolist() == [0, 1, 3, 2, 4]

    def test_batch_rank(self):
        mats = np.array([[[1, 0], [0, 1]], [[1, 1], [1, 1]], [[0, 0], [0, 0]]])
        assert batch_rank(mats, 2).tolist() == [2, 1, 0]

    def test_rank_mod_p_depends_on_p(self):
        mat = np.array([[1, 2], [2, 1]])
        # det = -3
        assert rank_mod_p(mat, 3) == 1
        assert rank_mod_p(mat, 5) == 2

    def test_empty_stack(self):
        assert batch_rank(np.zeros((0, 3, 3), dtype=np.int64), 3).shape == (0,)


class TestInverse:
    """Tests for inverses and null spaces."""

    def test_inverse(self):
        mat = np.array([[1, 2], [3, 4]])
        inv = inverse_mod_p(mat, 5)
        assert ((mat @ inv) % 5).tolist() == [[1, 0], [0, 1]]

    def test_singular_batch(self):
        with pytest.raises(ParameterError, match="singular"):
            batch_inverse(np.array([[[1, 1], [1, 1]]]), 2)

    def test_null_space(self):
        mat = np.array([[1, 1, 0], [0, 1, 1]])
        basis = null_space_mod_p(mat, 2)
        assert basis.shape == (1, 3)
        assert not np.any((mat @ basis.T) % 2)

    def test_left_null_space(self):
        mat = np.array([[1, 2], [2, 4]])
        basis = left_null_space_mod_p(mat, 5)
        assert basis.shape == (1, 2)
        assert not np.any((basis @ mat) % 5)


class TestRowSpaces:
    """Tests for row reduction and spans."""

    def test_row_reduce_drops_zero_rows(self):
        reduced = row_reduce_mod_p(np.array([[1, 1], [2, 2]]), 3)
        assert reduced.tolist() == [[1, 1]]

    def test_same_row_space(self):
        a = np.array([[1, 0, 1], [0, 1, 1]])
        b = np.array([[1, 1, 2], [1, 2, 0]])
        assert same_row_space(a, b, 3)
        assert not same_row_space(a, np.array([[1, 0, 0], [0, 1, 0]]), 3)

    def test_coordinates_in_span(self):
        basis = np.array([[1, 0, 1], [0, 1, 1]])
        coords = coordinates_in_span(basis, np.array([[2, 1, 0]]), 3)
        assert coords.tolist() == [[2, 1]]

    def test_coordinates_outside_span(self):
        basis = np.array([[1, 0, 0]])
        with pytest.raises(ConsistencyError):
            coordinates_in_span(basis, np.array([[0, 1, 0]]), 3)


class TestEncoding:
    """Tests for base-p matrix codes."""

    def test_matrices_from_indices(self):
        mats = matrices_from_indices(np.arange(16), 2, 2)
        assert len({m.tobytes() for m in mats}) == 16
        # 5 = 1 + 4: entries (0, 0) and (1, 0)
        assert mats[5].tolist() == [[1, 0], [1, 0]]
