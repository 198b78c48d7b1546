from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from bruhat_hecke.linalg import (
    Echelon,
    Matrix,
    block_diagonal,
    charpoly,
    fmt,
    inverse,
    kron,
    parse_rational,
    rational_roots,
    solve,
)

small = st.integers(-3, 3)


def matrices(max_dim: int = 4):
    return st.integers(1, max_dim).flatmap(
        lambda d: st.lists(st.lists(small, min_size=d, max_size=d), min_size=d, max_size=d)
    ).map(Matrix.from_rows)


def det(rows) -> Fraction:
    n = len(rows)
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        sign = (-1) ** sum(1 for a, b in itertools.combinations(range(n), 2) if p[a] > p[b])
        prod = Fraction(1)
        for i in range(n):
            prod *= rows[i][p[i]]
        total += sign * prod
    return total


def test_basic_products():
    A = Matrix.from_rows([[1, 2], [3, 4]])
    B = Matrix.from_rows([[0, 1], [1, 0]])
    assert (A @ B).to_rows() == [[2, 1], [4, 3]]
    assert A.T.to_rows() == [[1, 3], [2, 4]]
    assert (A - A).is_zero()
    assert A.rank() == 2 and Matrix.from_rows([[1, 2], [2, 4]]).rank() == 1


def test_kron_and_blocks():
    A = Matrix.from_rows([[1, 2], [0, 1]])
    I = Matrix.identity(2)
    K = kron(A, I)
    assert K[0, 2] == 2 and K[1, 3] == 2 and K[0, 3] == 0
    D = block_diagonal([A, Matrix.identity(1)])
    assert D.shape == (3, 3) and D[2, 2] == 1 and D[0, 1] == 2


def test_solve_and_inverse():
    A = Matrix.from_rows([[2, 1], [1, 1]])
    x = solve(A, {0: 3, 1: 2})
    assert A.apply(x) == {0: 3, 1: 2}
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), {0: 1}) is None
    assert inverse(A) @ A == Matrix.identity(2)
    assert inverse(Matrix.from_rows([[1, 1], [1, 1]])) is None


def test_roots_and_formatting():
    assert sorted(rational_roots([-2, 1, 1])) == [-2, 1]
    assert rational_roots([0, 0, 1]) == [0]
    assert fmt(Fraction(-3, 4)) == "-3/4" and parse_rational("-3/4") == Fraction(-3, 4)


def test_echelon():
    e = Echelon()
    assert e.add({0: 1, 1: 1}) is not None
    assert e.add({0: 2, 1: 2}) is None
    assert e.contains({0: -1, 1: -1}) and not e.contains({1: 1})


@given(matrices())
def test_charpoly_constant_is_signed_determinant(A):
    rows = A.to_rows()
    c = charpoly(A)
    assert c[-1] == 1
    assert c[0] == (-1) ** A.nrows * det(rows)
    assert A.is_invertible() == (det(rows) != 0)


@given(matrices())
def test_nullspace_and_rank(A):
    ns = A.nullspace()
    assert len(ns) + A.rank() == A.ncols
    for v in ns:
        assert not A.apply(v)


@given(matrices(3))
def test_cayley_hamilton(A):
    c = charpoly(A)
    acc = Matrix.zero(A.nrows, A.nrows)
    power = Matrix.identity(A.nrows)
    for coeff in c:
        acc = acc + power.scale(coeff)
        power = power @ A
    assert acc.is_zero()
