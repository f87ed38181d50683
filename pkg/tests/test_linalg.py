"""Exact linear algebra: golden examples and algebraic properties."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from poissonlie.linalg import (
    DimensionMismatch,
    Matrix,
    NonSymmetric,
    SingularMatrix,
    basis_vector,
    inverse,
    is_positive_definite,
    kernel,
    rat_from_str,
    rat_to_str,
    solve,
)

from helpers import random_invertible


def test_kernel_full_rank_is_empty():
    assert kernel(Matrix.identity(3)) == []


def test_kernel_zero_map_is_standard_basis():
    assert kernel(Matrix.zeros(2, 3)) == [basis_vector(3, i) for i in (1, 2, 3)]


def test_kernel_rank_one():
    # hand row reduction: [[1,1],[2,2]] -> [[1,1],[0,0]], free column 2,
    # raw kernel vector (-1, 1), echelon-normalized to (1, -1)
    assert kernel(Matrix([[1, 1], [2, 2]])) == [(Fraction(1), Fraction(-1))]


def test_kernel_basis_is_echelon_and_annihilates():
    rng = random.Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        m = Matrix([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        basis = kernel(m)
        assert len(basis) == cols - m.rank()
        for v in basis:
            assert all(x == 0 for x in m.apply(v))
        if basis:
            stacked, pivots = Matrix(basis).rref()
            assert [stacked.row(i) for i in range(len(basis))] == basis
            assert len(pivots) == len(basis)


def test_solve_identity_and_scalar():
    assert solve(Matrix.identity(2), [5, -3]) == (Fraction(5), Fraction(-3))
    assert solve(Matrix([[2]]), [3]) == (Fraction(3, 2),)


def test_solve_inconsistent_is_flagged_not_raised():
    # rank of [[1,1],[1,1]] is 1 but the augmented rank is 2
    assert solve(Matrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve(Matrix.identity(2), [1, 2, 3])


def test_solve_underdetermined_sets_free_variables_to_zero():
    x = solve(Matrix([[1, 1]]), [7])
    assert x == (Fraction(7), Fraction(0))


def test_inverse_examples():
    assert inverse(Matrix.identity(3)) == Matrix.identity(3)
    assert inverse(Matrix.diagonal([1, 1, Fraction(5, 3)])) == Matrix.diagonal(
        [1, 1, Fraction(3, 5)]
    )
    m = Matrix([[2, 1], [1, 1]])
    minv = inverse(m)
    # multiply-back oracle
    assert m * minv == Matrix.identity(2)
    assert minv == Matrix([[1, -1], [-1, 2]])


def test_inverse_singular_raises():
    with pytest.raises(SingularMatrix):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_positive_definite_examples():
    assert is_positive_definite(Matrix.identity(4))
    assert not is_positive_definite(Matrix.diagonal([1, -1]))
    # minor expansion oracle: leading minors of [[2,1],[1,1]] are 2 and 2*1-1*1=1
    assert is_positive_definite(Matrix([[2, 1], [1, 1]]))
    with pytest.raises(NonSymmetric):
        is_positive_definite(Matrix([[1, 2], [0, 1]]))


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)])
        assert m.rank() + len(kernel(m)) == cols


def test_inverse_and_solve_roundtrip_random():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = random_invertible(rng, n)
        assert inverse(m) * m == Matrix.identity(n)
        x = tuple(Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3))) for _ in range(n))
        assert solve(m, m.apply(x)) == x


@given(
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=30),
)
def test_rational_string_roundtrip(p, q):
    f = Fraction(p, q)
    text = rat_to_str(f)
    assert " " not in text
    assert rat_from_str(text) == f
    if f.denominator == 1:
        assert "/" not in text


@pytest.mark.parametrize("bad", ["1/0", "1 /2", " 1", "+1", "1/-2", "a", "1.5", ""])
def test_rational_string_rejects_malformed(bad):
    with pytest.raises(ValueError):
        rat_from_str(bad)


def test_matrix_ops_are_exact():
    m = Matrix([[Fraction(1, 3), 2], [3, Fraction(5, 7)]])
    assert (m + m).row(0) == (Fraction(2, 3), Fraction(4))
    assert (m - m).is_zero()
    assert m * inverse(m) == Matrix.identity(2)
