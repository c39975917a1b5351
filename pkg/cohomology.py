"""
Chevalley-Eilenberg cohomology of a Lie algebra with finite dimensional coefficients.

A ``k``-cochain is an alternating map ``p^k → W``. It is stored as a vector whose
entry ``J·m + w`` is the ``w``-th coordinate of its value on ``(p_{j_0}, ...,
p_{j_{k-1}})``, where ``J`` is the position of the index tuple ``j_0 < ... < j_{k-1}``
in lexicographic order and ``m = dim W``.

The differential is

``δα(x_0, ..., x_k) = Σ_i (−1)^i x_i·α(..., x̂_i, ...)
+ Σ_{a<b} (−1)^{a+b} α([x_a, x_b], ..., x̂_a, ..., x̂_b, ...)``.
"""

import bisect
from fractions import Fraction
from functools import lru_cache
import itertools
import logging
from typing import (
    List,
    Optional,
    Sequence,
    Tuple,
)

from . import linalg
from .decorators import log_calls
from .errors import NotClosedError
from .liealg import LieAlgebra
from .linalg import Matrix, Vector

_logger = logging.getLogger(__name__)


class PModule:
    """
    Finite dimensional representation of a Lie algebra.

    :param algebra: The acting algebra ``p``.
    :param dim: Dimension ``m`` of the module.
    :param matrices: ``ρ(p_i)`` for the basis of `algebra`, ``m × m`` each.
    :param name: Optional name for logs and reports.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        dim: int,
        matrices: Sequence[Sequence[Sequence[Fraction]]],
        *,
        name: Optional[str] = None,
    ) -> None:
        assert len(matrices) == algebra.dim, "One matrix per basis element is needed"
        assert all(
            len(matrix) == dim and all(len(row) == dim for row in matrix)
            for matrix in matrices
        ), f"Action matrices must be {dim}x{dim}"
        self.algebra = algebra
        self.dim = dim
        self.matrices: Tuple[Matrix, ...] = tuple(
            [list(row) for row in matrix] for matrix in matrices
        )
        self.name = name

    @classmethod
    def trivial(cls, algebra: LieAlgebra, dim: int = 1) -> 'PModule':
        """``ℝ^dim`` with the zero action."""
        return cls(
            algebra, dim, [linalg.zeros(dim, dim)] * algebra.dim, name='trivial'
        )

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> 'PModule':
        """The algebra acting on itself by ``ad``."""
        return cls(
            algebra,
            algebra.dim,
            [algebra.ad_matrix(algebra.basis_vector(i)) for i in range(algebra.dim)],
            name='adjoint',
        )

    def action(self, x: Sequence[Fraction]) -> Matrix:
        """``ρ(x)`` for a coordinate vector `x`."""
        result = linalg.zeros(self.dim, self.dim)
        for coefficient, matrix in zip(x, self.matrices):
            if coefficient:
                result = linalg.add(result, linalg.scale(coefficient, matrix))
        return result

    def verify(self) -> bool:
        """Check ``ρ([p_i, p_j]) = [ρ(p_i), ρ(p_j)]`` on all basis pairs (exact)."""
        for i, j in itertools.combinations(range(self.algebra.dim), 2):
            bracket = self.algebra.bracket(
                self.algebra.basis_vector(i), self.algebra.basis_vector(j)
            )
            if self.action(bracket) != linalg.commutator(
                self.matrices[i], self.matrices[j]
            ):
                _logger.info(f"Module {self} breaks the bracket on ({i}, {j})")
                return False
        return True

    def __repr__(self) -> str:
        return f'PModule({self.algebra!r}, dim={self.dim}, name={self.name!r})'

    def __str__(self) -> str:
        return self.name if self.name is not None else f'<{self.dim}-dim module>'


@lru_cache(maxsize=None)
def wedge_basis(dim: int, degree: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Index tuples of the basis of ``Λ^degree p*``.

    >>> wedge_basis(3, 2)
    ((0, 1), (0, 2), (1, 2))
    """
    return tuple(itertools.combinations(range(dim), degree))


def cochain_dimension(module: PModule, degree: int) -> int:
    """Dimension of ``Λ^degree p* ⊗ W``."""
    return len(wedge_basis(module.algebra.dim, degree)) * module.dim


def ce_differential(module: PModule, degree: int) -> Matrix:
    """
    Matrix of ``δ`` from ``degree``-cochains to ``(degree + 1)``-cochains.

    For ``degree = dim p`` there are no ``(degree + 1)``-cochains and the matrix has
    no rows.

    :raises AssertionError: `degree` is outside ``0..dim p``.
    """
    n, m = module.algebra.dim, module.dim
    assert 0 <= degree <= n, f"Degree {degree} outside 0..{n}"

    source_index = {J: i for i, J in enumerate(wedge_basis(n, degree))}
    targets = wedge_basis(n, degree + 1)
    matrix = linalg.zeros(len(targets) * m, len(source_index) * m)
    structure = module.algebra.structure

    for row_block, J in enumerate(targets):
        for i, j in enumerate(J):
            column_block = source_index[J[:i] + J[i + 1 :]]
            sign = -1 if i % 2 else 1
            for w, row in enumerate(module.matrices[j]):
                for u, x in enumerate(row):
                    if x:
                        matrix[row_block * m + w][column_block * m + u] += sign * x

        for a, b in itertools.combinations(range(degree + 1), 2):
            rest = J[:a] + J[a + 1 : b] + J[b + 1 :]
            for c, coefficient in enumerate(structure[J[a]][J[b]]):
                if coefficient == 0 or c in rest:
                    continue
                # Moving `c` from the front to its sorted place.
                position = bisect.bisect_left(rest, c)
                merged = rest[:position] + (c,) + rest[position:]
                sign = -1 if (a + b + position) % 2 else 1
                column_block = source_index[merged]
                row, column = row_block * m, column_block * m
                for w in range(m):
                    matrix[row + w][column + w] += sign * coefficient
    # endfor

    return matrix


class CEComplex:
    """
    The complex ``(Λ^k p* ⊗ W, δ_k)`` for ``k = 0..dim p``.

    Differentials are built once on construction.
    """

    def __init__(self, module: PModule) -> None:
        self.module = module
        self.differentials: Tuple[Matrix, ...] = tuple(
            ce_differential(module, k) for k in range(module.algebra.dim + 1)
        )
        self._ranks: List[Optional[int]] = [None] * len(self.differentials)

    def dimension(self, degree: int) -> int:
        """Dimension of the cochain space of the given degree."""
        return cochain_dimension(self.module, degree)

    def rank(self, degree: int) -> int:
        """Rank of ``δ_degree``; ``0`` outside ``0..dim p``."""
        if not 0 <= degree < len(self.differentials):
            return 0
        cached = self._ranks[degree]
        if cached is None:
            cached = linalg.rank(self.differentials[degree], self.dimension(degree))
            self._ranks[degree] = cached
        return cached

    def verify(self) -> bool:
        """Check ``δ_{k+1} δ_k = 0`` for all ``k`` (exact)."""
        for k in range(len(self.differentials) - 1):
            first, second = self.differentials[k], self.differentials[k + 1]
            if not first or not second:
                continue
            if not linalg.is_zero(linalg.matmul(second, first)):
                _logger.warning(f"δ² != 0 in degree {k} for {self.module}")
                return False
        return True

    def betti_numbers(self) -> List[int]:
        """``dim H^k`` for ``k = 0..dim p``."""
        return [
            self.dimension(k) - self.rank(k) - self.rank(k - 1)
            for k in range(len(self.differentials))
        ]


def cohomology_dim(module: PModule, degree: int) -> int:
    """
    ``dim H^degree(p, W) = dim ker δ_degree − rank δ_{degree−1}``.

    :raises AssertionError: `degree` is outside ``0..dim p``.
    """
    assert 0 <= degree <= module.algebra.dim
    result = cochain_dimension(module, degree) - linalg.rank(
        ce_differential(module, degree), cochain_dimension(module, degree)
    )
    if degree > 0:
        result -= linalg.rank(
            ce_differential(module, degree - 1), cochain_dimension(module, degree - 1)
        )
    return result


@log_calls(_logger, log_result=False)
def solve_coboundary(
    module: PModule, degree: int, cochain: Sequence[Fraction]
) -> Optional[Vector]:
    """
    Find ``η`` with ``δη = h``.

    The solution is the one :func:`linalg.solve` picks (free coordinates zero), so it
    only depends on the input.

    :param degree: Degree ``k`` of ``h``; ``η`` has degree ``k − 1``.
    :param cochain: The cochain ``h``.

    :returns: ``η``, or `None` if the class of ``h`` does not vanish. For
      ``k = 0`` the only coboundary is ``0``, whose preimage is the empty vector.

    :raises NotClosedError: ``δh ≠ 0``.
    """
    assert len(cochain) == cochain_dimension(module, degree), "Cochain size mismatch"
    if degree < module.algebra.dim:
        image = linalg.matvec(ce_differential(module, degree), cochain)
        if any(image):
            raise NotClosedError(
                f"Cochain of degree {degree} is not closed in {module}"
            )

    if degree == 0:
        return [] if not any(cochain) else None

    return linalg.solve(
        ce_differential(module, degree - 1),
        cochain,
        cochain_dimension(module, degree - 1),
    )
