"""Tests for `linalg` module."""

from fractions import Fraction
import random

import pytest

from . import linalg
from .rational import GaussianRational
from .testutils import DEFAULT_SEEDS, random_matrix, rows


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__nullspace__random(seed: int) -> None:
    rng = random.Random(seed)
    matrix = random_matrix(rng, 3, 5)

    basis = linalg.nullspace(matrix)

    assert len(basis) == 5 - linalg.rank(matrix)
    for vector in basis:
        assert not any(linalg.matvec(matrix, vector))
    # endfor


def test__nullspace__no_rows() -> None:
    assert linalg.nullspace([], 2) == linalg.identity(2)


def test__gaussian_nullspace() -> None:
    i = GaussianRational.of(0, 1)
    one = GaussianRational.of(1)

    basis = linalg.gaussian_nullspace([[i, one]])

    # i x + y = 0 with y = 1.
    assert basis == [[GaussianRational.of(0, 1), one]]


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__solve__random(seed: int) -> None:
    rng = random.Random(seed)
    matrix = random_matrix(rng, 3, 4)
    x = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
    rhs = linalg.matvec(matrix, x)

    solution = linalg.solve(matrix, rhs)

    assert solution is not None
    assert linalg.matvec(matrix, solution) == rhs
    assert linalg.solve(matrix, rhs) == solution


def test__solve__inconsistent() -> None:
    assert linalg.solve(rows([1, 1], [2, 2]), rows([1, 3])[0]) is None


def test__spans() -> None:
    plane = rows([1, 0, 0], [0, 1, 0])
    line = rows([1, 1, 0])

    assert linalg.is_subspace(line, plane)
    assert not linalg.is_subspace(plane, line)
    assert linalg.in_span(plane, rows([2, -1, 0])[0])
    assert not linalg.in_span(plane, rows([0, 0, 1])[0])
    assert linalg.same_span(plane, rows([1, 1, 0], [1, -1, 0]))
    assert linalg.row_basis(rows([0, 2, 0], [3, 0, 0], [1, 1, 0])) == plane


def test__intersection() -> None:
    one = rows([1, 0, 0], [0, 1, 0])
    another = rows([0, 1, 0], [0, 0, 1])

    assert linalg.same_span(linalg.intersection(one, another, 3), rows([0, 1, 0]))
    assert linalg.intersection(rows([1, 0, 0]), rows([0, 0, 1]), 3) == []


def test__annihilator() -> None:
    annihilator = linalg.annihilator(rows([1, 1]), 2)

    assert linalg.same_span(annihilator, rows([1, -1]))
    assert linalg.annihilator([], 2) == linalg.identity(2)


def test__coordinates() -> None:
    basis = rows([1, 1, 0], [0, 1, 1])

    assert linalg.coordinates(basis, rows([2, 5, 3])[0]) == rows([2, 3])[0]
    assert linalg.coordinates(basis, rows([0, 0, 1])[0]) is None


def test__inverse() -> None:
    matrix = rows([2, 1], [1, 1])

    assert linalg.matmul(matrix, linalg.inverse(matrix)) == linalg.identity(2)
    with pytest.raises(ZeroDivisionError):
        linalg.inverse(rows([1, 2], [2, 4]))


def test__det() -> None:
    assert linalg.det(rows([1, 2], [3, 4])) == -2
    assert linalg.det([]) == 1


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__charpoly__annihilates(seed: int) -> None:
    matrix = random_matrix(random.Random(seed), 3)

    coefficients = linalg.charpoly(matrix)

    assert linalg.is_zero(linalg.poly_at_matrix(coefficients, matrix))
    assert linalg.from_poly(linalg.to_poly(coefficients)) == coefficients


def test__commutator() -> None:
    e = rows([0, 1], [0, 0])
    f = rows([0, 0], [1, 0])

    assert linalg.commutator(e, f) == rows([1, 0], [0, -1])


@pytest.mark.parametrize(
    'matrix, expected',
    (
        (rows([2, -1], [-1, 2]), True),
        (rows([1, 0], [0, 0]), True),
        (rows([1, 2], [2, 1]), False),
        ([], True),
    ),
)
def test__is_positive_semidefinite(matrix: linalg.Matrix, expected: bool) -> None:
    assert linalg.is_positive_semidefinite(matrix) is expected
