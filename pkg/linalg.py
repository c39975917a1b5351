"""
Exact linear algebra over ℚ (and ℚ(i)).

Vectors are lists of `Fraction` and matrices are lists of rows. Computations are
delegated to :class:`sympy.polys.matrices.DomainMatrix`, using its fraction-free row
reduction, so all results are exact and deterministic.

.. note::
  Matrices without rows cannot carry their column count, so functions that need it
  take an explicit `ncols`.
"""

from fractions import Fraction
import logging
from typing import (
    Any,
    List,
    Optional,
    Sequence,
    Tuple,
)

from sympy import QQ, QQ_I, Poly, Rational, Symbol
from sympy.polys.matrices import DomainMatrix

from .rational import GaussianRational, from_domain, to_domain

_logger = logging.getLogger(__name__)

Vector = List[Fraction]
Matrix = List[List[Fraction]]
MatrixLike = Sequence[Sequence[Fraction]]
"""Read-only matrix argument."""

_X = Symbol('x')


def _shape(rows: Sequence[Sequence[Any]], ncols: Optional[int]) -> Tuple[int, int]:
    if ncols is None:
        assert len(rows) > 0, "`ncols` is needed for a matrix without rows"
        ncols = len(rows[0])

    assert all(len(row) == ncols for row in rows), "Ragged matrix"
    return len(rows), ncols


def to_domain_matrix(rows: MatrixLike, ncols: Optional[int] = None) -> DomainMatrix:
    """Convert to a dense `DomainMatrix` over ``QQ``."""
    shape = _shape(rows, ncols)
    if 0 in shape:
        return DomainMatrix.zeros(shape, QQ).to_dense()

    return DomainMatrix([[to_domain(x) for x in row] for row in rows], shape, QQ)


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    """Convert a `DomainMatrix` over ``QQ`` (or ``ZZ``) to a list of rows."""
    return [[from_domain(x) for x in row] for row in matrix.to_list()]


def _reduce(
    rows: Sequence[Sequence[Any]], ncols: int, domain: Any  # noqa: ANN401
) -> Tuple[List[List[Any]], Tuple[int, ...]]:
    # Nonzero rows of the reduced row echelon form, as domain elements.
    if len(rows) == 0 or ncols == 0:
        return [], ()

    matrix = DomainMatrix([list(row) for row in rows], (len(rows), ncols), domain)
    reduced, denominator, pivots = matrix.rref_den()
    entries = reduced.to_list()
    return [
        [domain.quo(x, denominator) for x in entries[i]] for i in range(len(pivots))
    ], tuple(pivots)


def rref(
    rows: MatrixLike, ncols: Optional[int] = None
) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form.

    :returns: The nonzero rows of the reduced matrix and the pivot columns.
    """
    _, ncols = _shape(rows, ncols)
    reduced, pivots = _reduce([[to_domain(x) for x in row] for row in rows], ncols, QQ)
    return [[from_domain(x) for x in row] for row in reduced], pivots


def rank(rows: MatrixLike, ncols: Optional[int] = None) -> int:
    """
    Rank of a matrix.

    >>> rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    1
    """
    if len(rows) == 0:
        return 0

    return len(rref(rows, ncols)[1])


def _nullspace_from_reduced(
    reduced: Sequence[Sequence[Any]],
    pivots: Tuple[int, ...],
    ncols: int,
    zero: Any,  # noqa: ANN401
    one: Any,  # noqa: ANN401
) -> List[List[Any]]:
    basis = []
    for free in (j for j in range(ncols) if j not in pivots):
        vector = [zero] * ncols
        vector[free] = one
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]

        basis.append(vector)

    return basis


def nullspace(rows: MatrixLike, ncols: Optional[int] = None) -> Matrix:
    """
    Basis of the kernel ``{x | A x = 0}``.

    One basis vector per non-pivot column, with ``1`` in that column.

    >>> nullspace([[Fraction(1), Fraction(1)]])
    [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    _, ncols = _shape(rows, ncols)
    reduced, pivots = rref(rows, ncols)
    return _nullspace_from_reduced(reduced, pivots, ncols, Fraction(0), Fraction(1))


def gaussian_nullspace(
    rows: Sequence[Sequence[GaussianRational]], ncols: Optional[int] = None
) -> List[List[GaussianRational]]:
    """Basis of the kernel of a matrix over ℚ(i), normalized as :func:`nullspace`."""
    _, ncols = _shape(rows, ncols)
    entries = [[x.to_domain() for x in row] for row in rows]
    reduced, pivots = _reduce(entries, ncols, QQ_I)
    basis = _nullspace_from_reduced(reduced, pivots, ncols, QQ_I.zero, QQ_I.one)
    return [[GaussianRational.from_domain(x) for x in vector] for vector in basis]


def solve(
    rows: MatrixLike,
    rhs: Sequence[Fraction],
    ncols: Optional[int] = None,
) -> Optional[Vector]:
    """
    Solve ``A x = b``.

    The solution is the one with all free variables set to zero, so it is determined
    by `A` and `b` alone.

    :returns: A solution, or `None` if the system is inconsistent.
    """
    nrows, ncols = _shape(rows, ncols)
    assert len(rhs) == nrows, "Right hand side does not match"

    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None

    solution = [Fraction(0)] * ncols
    for row, pivot in zip(reduced, pivots):
        solution[pivot] = row[ncols]

    return solution


def row_basis(vectors: MatrixLike, ncols: Optional[int] = None) -> Matrix:
    """Canonical basis of the span of `vectors` (reduced row echelon rows)."""
    if len(vectors) == 0:
        return []

    return rref(vectors, ncols)[0]


def in_span(vectors: MatrixLike, vector: Sequence[Fraction]) -> bool:
    """Check whether `vector` lies in the span of `vectors`."""
    if all(x == 0 for x in vector):
        return True

    if len(vectors) == 0:
        return False

    return rank(list(vectors) + [list(vector)]) == rank(vectors)


def is_subspace(smaller: MatrixLike, larger: MatrixLike) -> bool:
    """Check ``span(smaller) ⊆ span(larger)``."""
    if len(smaller) == 0:
        return True

    if len(larger) == 0:
        return all(all(x == 0 for x in vector) for vector in smaller)

    return rank(list(larger) + list(smaller)) == rank(larger)


def same_span(one: MatrixLike, another: MatrixLike) -> bool:
    """Check that two families span the same subspace."""
    return is_subspace(one, another) and is_subspace(another, one)


def annihilator(basis: MatrixLike, dim: int) -> Matrix:
    """
    Basis of ``{y | y·w = 0 for all w in span(basis)}`` in the dual of ℚ^dim.

    Dual vectors are expressed in the dual basis.
    """
    if len(basis) == 0:
        return identity(dim)

    return nullspace(basis, dim)


def intersection(one: MatrixLike, another: MatrixLike, dim: int) -> Matrix:
    """Basis of ``span(one) ∩ span(another)`` computed through annihilators."""
    return annihilator(annihilator(one, dim) + annihilator(another, dim), dim)


def coordinates(basis: MatrixLike, vector: Sequence[Fraction]) -> Optional[Vector]:
    """Coefficients of `vector` in the linearly independent family `basis`."""
    if len(basis) == 0:
        return [] if all(x == 0 for x in vector) else None

    return solve(transpose(basis), vector, len(basis))


def zeros(nrows: int, ncols: int) -> Matrix:
    """Zero matrix."""
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(dim: int) -> Matrix:
    """Identity matrix."""
    return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]


def transpose(rows: MatrixLike) -> Matrix:
    """Transposed matrix (`rows` must have at least one row)."""
    return [list(column) for column in zip(*rows)]


def matmul(one: MatrixLike, another: MatrixLike) -> Matrix:
    """Matrix product."""
    columns = transpose(another)
    return [
        [sum((x * y for x, y in zip(row, column)), Fraction(0)) for column in columns]
        for row in one
    ]


def matvec(rows: MatrixLike, vector: Sequence[Fraction]) -> Vector:
    """Matrix-vector product."""
    return [sum((x * y for x, y in zip(row, vector)), Fraction(0)) for row in rows]


def add(one: MatrixLike, another: MatrixLike) -> Matrix:
    """Entrywise sum."""
    return [[x + y for x, y in zip(row, other)] for row, other in zip(one, another)]


def scale(factor: Fraction, rows: MatrixLike) -> Matrix:
    """Multiply every entry by `factor`."""
    return [[factor * x for x in row] for row in rows]


def commutator(one: MatrixLike, another: MatrixLike) -> Matrix:
    """``AB − BA``."""
    return add(matmul(one, another), scale(Fraction(-1), matmul(another, one)))


def is_zero(rows: MatrixLike) -> bool:
    """Check that all entries vanish."""
    return all(x == 0 for row in rows for x in row)


def det(rows: MatrixLike) -> Fraction:
    """Determinant; ``1`` for the empty matrix."""
    if len(rows) == 0:
        return Fraction(1)

    return from_domain(to_domain_matrix(rows).det())


def inverse(rows: MatrixLike) -> Matrix:
    """
    Inverse matrix.

    :raises ZeroDivisionError: The matrix is singular.
    """
    if det(rows) == 0:
        raise ZeroDivisionError("Singular matrix")

    return from_domain_matrix(to_domain_matrix(rows).inv())


def charpoly(rows: MatrixLike) -> List[Fraction]:
    """
    Characteristic polynomial ``det(x − A)``, coefficients from the highest degree.

    >>> charpoly([[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]])
    [Fraction(1, 1), Fraction(0, 1), Fraction(1, 1)]
    """
    if len(rows) == 0:
        return [Fraction(1)]

    return [from_domain(x) for x in to_domain_matrix(rows).charpoly()]


def to_poly(coefficients: Sequence[Fraction]) -> Poly:
    """Univariate sympy `Poly` over ``QQ`` in ``x``, coefficients from the highest."""
    return Poly(
        [Rational(c.numerator, c.denominator) for c in coefficients], _X, domain=QQ
    )


def from_poly(poly: Poly) -> List[Fraction]:
    """Coefficients of a `Poly` over ``QQ``, from the highest degree."""
    return [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]


def poly_at_matrix(coefficients: Sequence[Fraction], rows: MatrixLike) -> Matrix:
    """Evaluate a polynomial (coefficients from the highest degree) at a matrix."""
    dim = len(rows)
    result = zeros(dim, dim)
    for coefficient in coefficients:
        result = matmul(result, rows) if dim > 0 else result
        for i in range(dim):
            result[i][i] += coefficient

    return result


def kron(one: MatrixLike, another: MatrixLike) -> Matrix:
    """
    Kronecker product; row ``i·m + a`` and column ``j·m + b`` hold ``A_ij B_ab``.

    >>> kron(identity(2), [[Fraction(2)]])
    [[Fraction(2, 1), Fraction(0, 1)], [Fraction(0, 1), Fraction(2, 1)]]
    """
    return [
        [x * y for x in row for y in other_row]
        for row in one
        for other_row in another
    ]


def is_positive_semidefinite(rows: MatrixLike) -> bool:
    """
    Exact semidefiniteness of a symmetric rational matrix.

    >>> zero, one = Fraction(0), Fraction(1)
    >>> is_positive_semidefinite([[one, one], [one, one]])
    True
    >>> is_positive_semidefinite([[zero, one], [one, zero]])
    False
    """
    if len(rows) == 0:
        return True

    return bool(to_domain_matrix(rows).to_Matrix().is_positive_semidefinite)
