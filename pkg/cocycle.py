"""
Continuous 2-cocycles ``ω(ξ, η) = λ(κ(ξ, dη))`` on ``g_N = R_N ⊗ k``.

A cocycle is determined by a linear functional ``λ`` on ``Ω¹_{R_N}`` that vanishes on
exact forms. Invariance under a ``p``-action by vector fields adds the constraints
``λ(L_v α) = 0``. For an admissible ``λ`` and one field ``v`` the quadratic form
``q(f) = λ(L_v(f) df)`` on ``R_N`` is symmetric, and when it is positive
semidefinite its kernel ``𝒩`` generates the ideal ``J = R·L_v(𝒩)``, which every
positive energy representation of the cocycle must annihilate.

Everything is exact; functionals are dense coefficient vectors on the basis
``x^n dx_μ`` of :class:`ring.OneForm`.
"""

from fractions import Fraction
import logging
from typing import (
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from . import linalg
from .decorators import log_calls
from .errors import IndefiniteFormError, MismatchError, SymmetryError
from .jetlie import JetElement
from .liealg import axis_decomposition, semisimple_part
from .linalg import Matrix
from .rational import Rational, to_fraction
from .ring import (
    Exponent,
    FormalVectorField,
    OneForm,
    TruncSeries,
    exterior_d,
    form_dimension,
    lie_derivative_fn,
    lie_derivative_form,
    lie_derivative_matrix,
    monomials,
)

_logger = logging.getLogger(__name__)


class CocycleFunctional:
    """
    Linear functional ``λ`` on ``Ω¹_{R_N}``.

    :param dim: Dimension of ``V``.
    :param order: Truncation order ``N``.
    :param coefficients: ``λ(x^n dx_μ)`` in the dense basis of forms.
    """

    __slots__ = ('coefficients', 'dim', 'order')

    def __init__(self, dim: int, order: int, coefficients: Sequence[Rational]) -> None:
        assert len(coefficients) == form_dimension(dim, order), (
            f"{len(coefficients)} coefficients for forms of dimension "
            f"{form_dimension(dim, order)}"
        )
        self.dim = dim
        self.order = order
        self.coefficients: Tuple[Fraction, ...] = tuple(
            to_fraction(c) for c in coefficients
        )

    @classmethod
    def zero(cls, dim: int, order: int) -> 'CocycleFunctional':
        """The zero functional."""
        return cls(dim, order, [0] * form_dimension(dim, order))

    @classmethod
    def from_table(
        cls,
        dim: int,
        order: int,
        table: Mapping[Tuple[Exponent, int], Rational],
    ) -> 'CocycleFunctional':
        """
        Functional from its non-zero values ``λ(x^n dx_μ)`` keyed by ``(n, μ)``.

        >>> lam = CocycleFunctional.from_table(2, 1, {((0, 1), 0): 1, ((1, 0), 1): -1})
        >>> lam.value((0, 1), 0), lam.value((1, 0), 1), lam.value((1, 0), 0)
        (Fraction(1, 1), Fraction(-1, 1), Fraction(0, 1))
        """
        index = {exponent: i for i, exponent in enumerate(monomials(dim, order))}
        coefficients = [Fraction(0)] * form_dimension(dim, order)
        for (exponent, mu), value in table.items():
            coefficients[index[tuple(exponent)] * dim + mu] = to_fraction(value)
        return cls(dim, order, coefficients)

    def value(self, exponent: Sequence[int], mu: int) -> Fraction:
        """``λ(x^exponent dx_mu)``."""
        return self.evaluate(
            OneForm(
                [
                    TruncSeries.monomial(self.dim, self.order, exponent)
                    if nu == mu
                    else TruncSeries.zero(self.dim, self.order)
                    for nu in range(self.dim)
                ]
            )
        )

    def evaluate(self, alpha: OneForm) -> Fraction:
        """
        ``λ(α)``.

        :raises MismatchError: `alpha` lives on another ring.
        """
        if (alpha.dim, alpha.order) != (self.dim, self.order):
            raise MismatchError(
                f"Form on (dim, order) = {(alpha.dim, alpha.order)} for a functional "
                f"on {(self.dim, self.order)}"
            )
        return sum(
            (c * x for c, x in zip(self.coefficients, alpha.to_vector()) if c),
            Fraction(0),
        )

    def is_zero(self) -> bool:
        """Return `True` for the zero functional."""
        return not any(self.coefficients)

    def closedness_witness(self) -> Optional[Exponent]:
        """A monomial ``f`` with ``λ(df) ≠ 0``, `None` if ``λ`` is closed."""
        for exponent, row in zip(
            monomials(self.dim, self.order + 1, 1), _exact_forms(self.dim, self.order)
        ):
            if _pair(self.coefficients, row) != 0:
                return exponent
        return None

    def is_closed(self) -> bool:
        """Check ``λ(df) = 0`` for all monomials ``f`` of degree ``1..N+1``."""
        return self.closedness_witness() is None

    def is_invariant(self, v: FormalVectorField) -> bool:
        """Check ``λ(L_v α) = 0`` on all basis forms ``α``."""
        return all(
            _pair(self.coefficients, row) == 0
            for row in _lie_rows(v.promote(self.order), self.order)
        )

    def scale(self, factor: Rational) -> 'CocycleFunctional':
        """``factor · λ``."""
        factor = to_fraction(factor)
        return CocycleFunctional(
            self.dim, self.order, [factor * c for c in self.coefficients]
        )

    def __neg__(self) -> 'CocycleFunctional':
        return self.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CocycleFunctional):
            return NotImplemented
        return (self.dim, self.order, self.coefficients) == (
            other.dim,
            other.order,
            other.coefficients,
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.order, self.coefficients))

    def __repr__(self) -> str:
        coefficients = list(self.coefficients)
        return f'CocycleFunctional({self.dim}, {self.order}, {coefficients!r})'


def _pair(coefficients: Sequence[Fraction], vector: Sequence[Fraction]) -> Fraction:
    return sum((c * x for c, x in zip(coefficients, vector) if c and x), Fraction(0))


def _exact_forms(dim: int, order: int) -> Matrix:
    # d(x^n) for 1 <= |n| <= N + 1, truncated to Ω¹_{R_N}.
    return [
        exterior_d(TruncSeries.monomial(dim, order + 1, exponent))
        .promote(order)
        .to_vector()
        for exponent in monomials(dim, order + 1, 1)
    ]


def _lie_rows(v: FormalVectorField, order: int) -> Matrix:
    return [
        lie_derivative_form(v, OneForm.basis_element(v.dim, order, index)).to_vector()
        for index in range(form_dimension(v.dim, order))
    ]


def central_extension_dimension(dim: int, order: int) -> int:
    """
    Dimension of ``Ω¹_{R_N} / dR_{N+1}``, the center of the universal extension at
    truncation order `order`.

    >>> central_extension_dimension(1, 3)
    0
    >>> central_extension_dimension(2, 1)
    1
    """
    size = form_dimension(dim, order)
    return size - linalg.rank(_exact_forms(dim, order), size)


@log_calls(_logger, log_result=False)
def admissible_lambda_basis(
    fields: Sequence[FormalVectorField], order: int, dim: Optional[int] = None
) -> List[CocycleFunctional]:
    """
    Basis of the closed functionals on ``Ω¹_{R_order}`` invariant under `fields`.

    Invariance is imposed for the given fields only; for a ``p``-action pass the
    fields of a basis of ``p``. When `fields` is not empty, basis elements whose
    quadratic form for ``fields[0]`` is negative semidefinite are negated, so that
    ``q ≥ 0`` whenever one of the two orientations allows it.

    :param dim: Dimension of ``V``, needed only without fields.
    """
    if fields:
        dim = fields[0].dim
    assert dim is not None, "Dimension is needed without fields"

    rows = _exact_forms(dim, order)
    for v in fields:
        rows.extend(_lie_rows(v.promote(order), order))
    size = form_dimension(dim, order)
    basis = [
        CocycleFunctional(dim, order, vector)
        for vector in linalg.nullspace(rows, size)
    ]
    _logger.debug(f"{len(basis)} admissible functionals at order {order}")

    if fields:
        v = fields[0].promote(order)
        for i, lam in enumerate(basis):
            if gram(lam, v).is_positive_semidefinite():
                continue
            if gram(-lam, v).is_positive_semidefinite():
                basis[i] = -lam
    return basis


def cocycle_eval(lam: CocycleFunctional, xi: JetElement, eta: JetElement) -> Fraction:
    """
    ``ω(ξ, η) = λ(κ(ξ, dη))`` with the Killing form ``κ`` of the fiber.

    Antisymmetry and the cocycle identity need ``λ`` to be closed; a warning is
    logged otherwise.

    :raises MismatchError: The arguments live on different rings or algebras.
    """
    xi.check_compatible(eta)
    if (xi.dim, xi.order) != (lam.dim, lam.order):
        raise MismatchError(
            f"Jet elements on (dim, order) = {(xi.dim, xi.order)} for a functional on "
            f"{(lam.dim, lam.order)}"
        )
    if not lam.is_closed():
        _logger.warning("Functional is not closed; the pairing is not antisymmetric")

    killing = xi.algebra.killing_matrix()
    form = OneForm.zero(lam.dim, lam.order)
    for a, xi_a in enumerate(xi.components):
        if xi_a.is_zero():
            continue
        for b, eta_b in enumerate(eta.components):
            if killing[a][b] != 0 and not eta_b.is_zero():
                form = form + exterior_d(eta_b) * xi_a.scale(killing[a][b])
    # endfor
    return lam.evaluate(form)


# Quadratic form ###


def quadratic_form(
    lam: CocycleFunctional, v: FormalVectorField, f: TruncSeries
) -> Fraction:
    """``q(f) = λ(L_v(f) df)``."""
    return lam.evaluate(exterior_d(f) * lie_derivative_fn(v, f))


class QuadraticFormData(NamedTuple):
    """
    Gram matrix of ``β(f, g) = λ(L_v(f) dg)`` on the monomials of ``R_N``.

    :param functional: ``λ``.
    :param field: ``v``.
    :param basis: The monomials, in graded lexicographic order.
    :param matrix: ``matrix[i][j] = β(basis[i], basis[j])``.
    """

    functional: CocycleFunctional
    field: FormalVectorField
    basis: Tuple[Exponent, ...]
    matrix: Matrix

    def asymmetry_witness(self) -> Optional[Tuple[int, int]]:
        """Indices ``(i, j)`` with ``β(f_i, f_j) ≠ β(f_j, f_i)``, `None` if none."""
        for i, row in enumerate(self.matrix):
            for j in range(i + 1, len(row)):
                if row[j] != self.matrix[j][i]:
                    return i, j
        return None

    def check_symmetric(self) -> None:
        """
        :raises SymmetryError: The form is not symmetric, which means ``λ`` is not
          closed or not invariant.
        """
        witness = self.asymmetry_witness()
        if witness is not None:
            i, j = witness
            raise SymmetryError(
                f"β(x^{self.basis[i]}, x^{self.basis[j]}) ≠ "
                f"β(x^{self.basis[j]}, x^{self.basis[i]})",
                witness=witness,
            )

    def is_positive_semidefinite(self) -> bool:
        """Exact test, meaningful for symmetric forms."""
        return self.asymmetry_witness() is None and linalg.is_positive_semidefinite(
            self.matrix
        )

    def radical(self) -> List[TruncSeries]:
        """Basis of ``{f | β(f, g) = 0 for all g}``."""
        dim, order = self.functional.dim, self.functional.order
        return [
            TruncSeries.from_vector(dim, order, vector)
            for vector in linalg.nullspace(self.matrix, len(self.basis))
        ]


def gram(lam: CocycleFunctional, v: FormalVectorField) -> QuadraticFormData:
    """Gram matrix of ``β(f, g) = λ(L_v(f) dg)``."""
    v = v.promote(lam.order)
    basis = monomials(lam.dim, lam.order)
    series = [TruncSeries.monomial(lam.dim, lam.order, exponent) for exponent in basis]
    derivatives = [lie_derivative_fn(v, f) for f in series]
    differentials = [exterior_d(g) for g in series]
    matrix = [
        [
            lam.evaluate(dg * lf) if not lf.is_zero() else Fraction(0)
            for dg in differentials
        ]
        for lf in derivatives
    ]
    return QuadraticFormData(lam, v, basis, matrix)


def quadratic_kernel(lam: CocycleFunctional, v: FormalVectorField) -> List[TruncSeries]:
    """
    The kernel ``𝒩`` of ``q``, computed as the radical of its Gram matrix.

    :raises SymmetryError: The Gram matrix is not symmetric.
    :raises IndefiniteFormError: ``q`` is not positive semidefinite, so ``λ`` cannot
      come from a positive energy representation.

    A kernel that is not closed under truncated multiplication is logged as a
    warning, see :func:`kernel_is_subalgebra`.
    """
    data = gram(lam, v)
    data.check_symmetric()
    if not data.is_positive_semidefinite():
        raise IndefiniteFormError(
            f"Quadratic form of {lam} is not positive semidefinite"
        )
    radical = data.radical()
    if not kernel_is_subalgebra(radical):
        _logger.warning(
            "Kernel of the quadratic form of %s is not closed under multiplication "
            "at order %d",
            lam,
            lam.order,
        )
    return radical



def _vectors(series: Sequence[TruncSeries]) -> Matrix:
    return [f.to_vector() for f in series]


def kernel_is_subalgebra(basis: Sequence[TruncSeries]) -> bool:
    """Check that the span of `basis` is closed under truncated multiplication."""
    if not basis:
        return True

    vectors = _vectors(basis)
    return all(
        linalg.in_span(vectors, (f * g).to_vector())
        for i, f in enumerate(basis)
        for g in basis[i:]
    )


def ideal_span(generators: Sequence[TruncSeries], order: int) -> List[TruncSeries]:
    """Canonical basis of the ideal ``R_order · generators``."""
    generators = [g.promote(order) for g in generators if not g.is_zero()]
    if not generators:
        return []

    dim = generators[0].dim
    products = [
        (TruncSeries.monomial(dim, order, exponent) * g).to_vector()
        for exponent in monomials(dim, order)
        for g in generators
    ]
    return [
        TruncSeries.from_vector(dim, order, vector)
        for vector in linalg.row_basis(products, len(monomials(dim, order)))
    ]


def vanishing_ideal(lam: CocycleFunctional, v: FormalVectorField) -> List[TruncSeries]:
    """``J = R·L_v(𝒩)``, see :func:`quadratic_kernel` for the errors."""
    v = v.promote(lam.order)
    generators = [lie_derivative_fn(v, f) for f in quadratic_kernel(lam, v)]
    return ideal_span(generators, lam.order)


def in_subspace(smaller: Sequence[TruncSeries], larger: Sequence[TruncSeries]) -> bool:
    """Exact containment of spans of series."""
    return linalg.is_subspace(_vectors(smaller), _vectors(larger))


# Off-axis subspace ###


class ESubspace(NamedTuple):
    """
    Sum ``E`` of the eigenspaces of ``L_S`` on ``R_N`` with eigenvalues off the
    imaginary axis, ``S`` the semisimple part of ``v_l``, split by degree.

    :param graded: Basis of ``E ∩ P^k(V)`` in monomial coordinates, for
      ``k = 0..order``.
    """

    dim: int
    order: int
    graded: Tuple[Matrix, ...]

    def piece(self, degree: int) -> List[TruncSeries]:
        """``E ∩ P^degree(V)`` as series."""
        return [
            TruncSeries.from_homogeneous_vector(self.dim, self.order, degree, vector)
            for vector in self.graded[degree]
        ]

    def filtration(self, degree: int) -> List[TruncSeries]:
        """``E^n = E ∩ I^n``."""
        return [f for k in range(degree, self.order + 1) for f in self.piece(k)]

    def basis(self) -> List[TruncSeries]:
        """Basis of ``E``."""
        return self.filtration(0)

    def linear_part(self) -> Matrix:
        """``E ∩ V*`` in the coordinates of the dual basis."""
        return [list(vector) for vector in self.graded[1]] if self.order >= 1 else []


def e_subspace(linear: Sequence[Sequence[Fraction]], order: int) -> ESubspace:
    """
    Off-axis subspace of ``L_{v_l}`` on ``R_order``, degree by degree.

    The generalized eigenspaces of ``L_{v_l}`` and the eigenspaces of ``L_S`` agree,
    so each degree is one :func:`liealg.axis_decomposition`.

    >>> e = e_subspace([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]], 1)
    >>> e.linear_part()
    [[Fraction(1, 1), Fraction(0, 1)]]
    """
    dim = len(linear)
    field = FormalVectorField.linear(linear, max(order, 1))
    graded = []
    for degree in range(order + 1):
        if degree == 0:
            graded.append([])
            continue
        matrix = lie_derivative_matrix(field, degree)
        graded.append(axis_decomposition(matrix).off_axis)
    # endfor
    return ESubspace(dim, order, tuple(graded))


def lambda_ss_check(lam: CocycleFunctional, v: FormalVectorField) -> bool:
    """
    Check ``λ(L_S α) = 0`` on all basis forms, ``S`` the semisimple part of ``v_l``.

    Holds for every closed invariant ``λ``; a failure is logged with the first
    offending basis form.
    """
    semisimple = FormalVectorField.linear(semisimple_part(v.linear_part()), lam.order)
    for index, row in enumerate(_lie_rows(semisimple, lam.order)):
        if _pair(lam.coefficients, row) != 0:
            _logger.warning(f"λ(L_S α) ≠ 0 for basis form {index} of {lam}")
            return False
    return True
