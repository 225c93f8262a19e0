"""Tests for exact sparse linear algebra helpers."""

import pytest

from hmcat.lincat.matrices import (
    add_scaled,
    apply,
    from_dod,
    identity,
    inverse,
    is_identity,
    kernel,
    matmul,
    quotient,
    rank,
    tensor_expand,
)
from hmcat.lincat.scalars import Field

F5 = Field(5)


def _matrix(entries: dict[int, dict[int, int]], shape: tuple[int, int]):
    return from_dod({i: {j: F5(v) for j, v in row.items()} for i, row in entries.items()}, shape, F5)


class TestVectors:
    """Tests for sparse vector helpers."""

    def test_add_scaled_drops_zeros(self) -> None:
        """Test that cancelling entries disappear."""
        acc = {0: F5(1), 1: F5(2)}
        add_scaled(acc, {1: F5(1)}, F5(-2))
        assert acc == {0: F5(1)}

    def test_tensor_expand(self) -> None:
        """Test (e0 + 2e1) ⊗ e2 expands to two terms."""
        out = tensor_expand([{0: F5(1), 1: F5(2)}, {2: F5(1)}], F5.one)
        assert out == {(0, 2): F5(1), (1, 2): F5(2)}


class TestMatrices:
    """Tests for rank, kernel, quotient and inverse."""

    @pytest.fixture
    def singular(self):
        """A 3x3 matrix of rank 2 over F5."""
        return _matrix({0: {0: 1, 1: 2}, 1: {1: 1, 2: 1}, 2: {0: 1, 1: 3, 2: 1}}, (3, 3))

    def test_rank(self, singular) -> None:
        """Test that the third row is the sum of the first two."""
        assert rank(singular) == 2
        assert rank(identity(4, F5)) == 4

    def test_rank_dense_and_sparse_agree(self, singular) -> None:
        """Test that the dense threshold does not change the rank."""
        assert rank(singular, dense_threshold=0) == rank(singular, dense_threshold=10**6)

    def test_kernel(self, singular) -> None:
        """Test that kernel vectors are annihilated."""
        ker = kernel(singular, F5)
        assert ker.dimension == 1
        product = matmul(singular, ker.basis)
        assert all(not v for row in product.to_sparse().to_dod().values() for v in row.values())

    def test_quotient(self) -> None:
        """Test k^3 / span(e0 − e1) has dimension 2."""
        relations = _matrix({0: {0: 1, 1: -1}}, (1, 3))
        q = quotient(relations, 3, F5)
        assert q.dimension == 2
        assert apply(q.projection, {0: F5.one}) == apply(q.projection, {1: F5.one})

    def test_inverse(self) -> None:
        """Test that an invertible matrix times its inverse is the identity."""
        m = _matrix({0: {0: 2, 1: 1}, 1: {1: 3}}, (2, 2))
        assert is_identity(matmul(m, inverse(m)))

    def test_inverse_singular(self, singular) -> None:
        """Test that a singular matrix raises ValueError."""
        with pytest.raises(ValueError, match="singular"):
            inverse(singular)
