"""
Truncated formal power series, one-forms and formal vector fields.

Everything lives on ``V = ℚ^d`` and is truncated at a global order ``N``: series are
elements of ``R_N = ℚ[[x_1, ..., x_d]] / I^{N+1}``, one-forms of
``Ω¹_{R_N} = R_N ⊗ V*`` and vector fields of ``X_I`` (no constant term).

Monomials are exponent tuples, ordered graded lexicographically: by degree first,
then ``x_1`` before ``x_2`` and so on. This order fixes every basis in the package.
"""

from fractions import Fraction
from functools import lru_cache
import itertools
import logging
from math import comb
from typing import (
    Dict,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from . import linalg
from .errors import AffineFieldError, MismatchError
from .linalg import Matrix
from .rational import Rational, to_fraction

_logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[Fraction, int]


def monomial_key(exponent: Exponent) -> Tuple[int, Tuple[int, ...]]:
    """Sort key of the graded lexicographic order."""
    return sum(exponent), tuple(-e for e in exponent)


@lru_cache(maxsize=None)
def monomials_of_degree(dim: int, degree: int) -> Tuple[Exponent, ...]:
    """
    Exponents of all monomials of a given degree, in graded lexicographic order.

    >>> monomials_of_degree(2, 2)
    ((2, 0), (1, 1), (0, 2))
    """
    exponents = []
    for combination in itertools.combinations_with_replacement(range(dim), degree):
        exponent = [0] * dim
        for mu in combination:
            exponent[mu] += 1
        exponents.append(tuple(exponent))

    return tuple(sorted(exponents, key=monomial_key))


@lru_cache(maxsize=None)
def monomials(dim: int, order: int, low: int = 0) -> Tuple[Exponent, ...]:
    """Exponents of all monomials of degree ``low..order``."""
    return tuple(
        exponent
        for degree in range(low, order + 1)
        for exponent in monomials_of_degree(dim, degree)
    )


@lru_cache(maxsize=None)
def monomial_index(dim: int, order: int) -> Dict[Exponent, int]:
    """Position of each monomial in :func:`monomials`."""
    return {exponent: i for i, exponent in enumerate(monomials(dim, order))}


def homogeneous_dimension(dim: int, degree: int) -> int:
    """
    Dimension of the homogeneous polynomials ``P^degree(V)``.

    >>> homogeneous_dimension(2, 3)
    4
    """
    return comb(dim + degree - 1, degree)


class TruncSeries:
    """
    Element of ``R_N``: a sparse table from exponents to rational coefficients.

    Zero coefficients are never stored, so equality of the tables is equality of the
    series. Terms of degree above `order` are discarded on construction.

    :param dim: Dimension ``d`` of ``V``.
    :param order: Truncation order ``N``.
    :param coefficients: Map from exponent tuples to coefficients.
    """

    __slots__ = ('_coefficients', 'dim', 'order')

    def __init__(
        self,
        dim: int,
        order: int,
        coefficients: Optional[Mapping[Exponent, Union[Scalar, Rational]]] = None,
    ) -> None:
        assert dim >= 1, "Dimension must be positive"
        assert order >= 0, "Order must be non-negative"
        self.dim = dim
        self.order = order

        table: Dict[Exponent, Fraction] = {}
        for exponent, value in (coefficients or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != dim:
                raise MismatchError(f"Exponent {exponent} does not have length {dim}")
            if any(e < 0 for e in exponent):
                raise MismatchError(f"Negative exponent {exponent}")
            if sum(exponent) > order:
                continue
            coefficient = to_fraction(value)
            if coefficient != 0:
                table[exponent] = coefficient

        self._coefficients = table

    @classmethod
    def _canonical(
        cls, dim: int, order: int, table: Dict[Exponent, Fraction]
    ) -> 'TruncSeries':
        # `table` is already free of zeros and of terms above `order`.
        series = cls.__new__(cls)
        series.dim = dim
        series.order = order
        series._coefficients = table  # noqa: SLF001
        return series

    @classmethod
    def zero(cls, dim: int, order: int) -> 'TruncSeries':
        """The zero series."""
        return cls._canonical(dim, order, {})

    @classmethod
    def constant(cls, dim: int, order: int, value: Scalar) -> 'TruncSeries':
        """A constant series."""
        return cls(dim, order, {(0,) * dim: value})

    @classmethod
    def monomial(
        cls, dim: int, order: int, exponent: Sequence[int], coefficient: Scalar = 1
    ) -> 'TruncSeries':
        """The series ``coefficient · x^exponent``."""
        return cls(dim, order, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, dim: int, order: int, mu: int) -> 'TruncSeries':
        """The coordinate function ``x_mu``."""
        exponent = [0] * dim
        exponent[mu] = 1
        return cls.monomial(dim, order, exponent)

    @classmethod
    def from_vector(
        cls, dim: int, order: int, vector: Sequence[Fraction], low: int = 0
    ) -> 'TruncSeries':
        """Inverse of :meth:`to_vector`."""
        basis = monomials(dim, order, low)
        assert len(vector) == len(basis), "Vector does not match the monomial basis"
        return cls._canonical(
            dim, order, {e: c for e, c in zip(basis, vector) if c != 0}
        )

    def to_vector(self, low: int = 0) -> List[Fraction]:
        """Dense coefficients on the monomials of degree ``low..order``."""
        return [
            self._coefficients.get(e, Fraction(0))
            for e in monomials(self.dim, self.order, low)
        ]

    def homogeneous_vector(self, degree: int) -> List[Fraction]:
        """Dense coefficients on the monomials of one degree."""
        return [
            self._coefficients.get(e, Fraction(0))
            for e in monomials_of_degree(self.dim, degree)
        ]

    @classmethod
    def from_homogeneous_vector(
        cls, dim: int, order: int, degree: int, vector: Sequence[Fraction]
    ) -> 'TruncSeries':
        """Inverse of :meth:`homogeneous_vector`."""
        basis = monomials_of_degree(dim, degree)
        assert len(vector) == len(basis)
        if degree > order:
            return cls.zero(dim, order)
        return cls._canonical(
            dim, order, {e: c for e, c in zip(basis, vector) if c != 0}
        )

    def items(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order."""
        return sorted(
            self._coefficients.items(), key=lambda item: monomial_key(item[0])
        )

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        """Coefficient of ``x^exponent``."""
        return self._coefficients.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        """Return `True` for the zero series."""
        return not self._coefficients

    def lowest_degree(self) -> Optional[int]:
        """Smallest degree of a stored term, `None` for zero."""
        if not self._coefficients:
            return None
        return min(sum(e) for e in self._coefficients)

    def homogeneous_part(self, degree: int) -> 'TruncSeries':
        """Sum of the terms of the given degree."""
        return TruncSeries._canonical(
            self.dim,
            self.order,
            {e: c for e, c in self._coefficients.items() if sum(e) == degree},
        )

    def promote(self, order: int) -> 'TruncSeries':
        """Same coefficients at another truncation order, dropping what does not fit."""
        return TruncSeries._canonical(
            self.dim,
            order,
            {e: c for e, c in self._coefficients.items() if sum(e) <= order},
        )

    def check_compatible(self, other: 'TruncSeries') -> None:
        """
        Check that two series live in the same ring.

        :raises MismatchError: Dimension or order differ.
        """
        if (self.dim, self.order) != (other.dim, other.order):
            raise MismatchError(
                f"Series of (dim, order) = {(self.dim, self.order)} and "
                f"{(other.dim, other.order)}"
            )

    def __add__(self, other: 'TruncSeries') -> 'TruncSeries':
        self.check_compatible(other)
        table = dict(self._coefficients)
        for exponent, value in other._coefficients.items():  # noqa: SLF001
            total = table.get(exponent, Fraction(0)) + value
            if total == 0:
                table.pop(exponent, None)
            else:
                table[exponent] = total

        return TruncSeries._canonical(self.dim, self.order, table)

    def __neg__(self) -> 'TruncSeries':
        return TruncSeries._canonical(
            self.dim, self.order, {e: -c for e, c in self._coefficients.items()}
        )

    def __sub__(self, other: 'TruncSeries') -> 'TruncSeries':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'TruncSeries':
        """Multiply by a rational number."""
        factor = Fraction(factor)
        if factor == 0:
            return TruncSeries.zero(self.dim, self.order)

        return TruncSeries._canonical(
            self.dim, self.order, {e: factor * c for e, c in self._coefficients.items()}
        )

    def __mul__(self, other: Union['TruncSeries', Scalar]) -> 'TruncSeries':
        if not isinstance(other, TruncSeries):
            return self.scale(other)

        self.check_compatible(other)
        table: Dict[Exponent, Fraction] = {}
        for one, one_value in self._coefficients.items():
            one_degree = sum(one)
            for another, another_value in other._coefficients.items():  # noqa: SLF001
                if one_degree + sum(another) > self.order:
                    continue
                exponent = tuple(a + b for a, b in zip(one, another))
                table[exponent] = (
                    table.get(exponent, Fraction(0)) + one_value * another_value
                )

        return TruncSeries._canonical(
            self.dim, self.order, {e: c for e, c in table.items() if c != 0}
        )

    def __rmul__(self, other: Scalar) -> 'TruncSeries':
        return self.scale(other)

    def partial(self, mu: int) -> 'TruncSeries':
        """Partial derivative ``∂f/∂x_mu``."""
        table = {}
        for exponent, value in self._coefficients.items():
            if exponent[mu] == 0:
                continue
            lowered = list(exponent)
            lowered[mu] -= 1
            table[tuple(lowered)] = value * exponent[mu]

        return TruncSeries._canonical(self.dim, self.order, table)

    def power(self, exponent: int) -> 'TruncSeries':
        """Truncated power."""
        result = TruncSeries.constant(self.dim, self.order, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, components: Sequence['TruncSeries']) -> 'TruncSeries':
        """
        Composition ``f ∘ g`` with a map ``g`` given by its components.

        :param components: One series per variable of `self`, without constant term.
          The result lives in their ring.
        """
        assert len(components) == self.dim, "One component per variable is needed"
        first = components[0]
        for each in components:
            first.check_compatible(each)
            assert ev0(each) == 0, "Substituted series must vanish at the origin"

        powers: Dict[Tuple[int, int], TruncSeries] = {}

        def _power(mu: int, k: int) -> TruncSeries:
            if (mu, k) not in powers:
                if k == 0:
                    powers[(mu, k)] = TruncSeries.constant(first.dim, first.order, 1)
                else:
                    powers[(mu, k)] = _power(mu, k - 1) * components[mu]
            return powers[(mu, k)]

        result = TruncSeries.zero(first.dim, first.order)
        for exponent, value in self._coefficients.items():
            if sum(exponent) > first.order:
                continue
            term = TruncSeries.constant(first.dim, first.order, value)
            for mu, k in enumerate(exponent):
                if k:
                    term = term * _power(mu, k)
            result = result + term

        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.dim, self.order, self._coefficients) == (
            other.dim,
            other.order,
            other._coefficients,  # noqa: SLF001
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.order, frozenset(self._coefficients.items())))

    def __repr__(self) -> str:
        return f'TruncSeries({self.dim}, {self.order}, {dict(self.items())!r})'

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        names = _variable_names(self.dim)
        terms = []
        for exponent, value in self.items():
            factors = [
                name if e == 1 else f'{name}^{e}'
                for name, e in zip(names, exponent)
                if e > 0
            ]
            if not factors:
                terms.append(str(value))
            elif value == 1:
                terms.append('*'.join(factors))
            else:
                terms.append(f'{value}*' + '*'.join(factors))
        return ' + '.join(terms)


def _variable_names(dim: int) -> List[str]:
    if dim <= 3:
        return ['x', 'y', 'z'][:dim]
    return [f'x{mu + 1}' for mu in range(dim)]


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Product in ``R_N``; terms above the truncation order are discarded.

    :raises MismatchError: `a` and `b` live in different rings.
    """
    return a * b


def ev0(f: TruncSeries) -> Fraction:
    """Constant term."""
    return f.coefficient((0,) * f.dim)


def jet_project(f: TruncSeries, k: int) -> TruncSeries:
    """
    Keep the terms of degree at most `k`, staying in the same ring.

    :raises MismatchError: `k` exceeds the truncation order.
    """
    if not 0 <= k <= f.order:
        raise MismatchError(f"Jet degree {k} outside 0..{f.order}")

    return TruncSeries._canonical(  # noqa: SLF001
        f.dim, f.order, {e: c for e, c in f.items() if sum(e) <= k}
    )


class OneForm:
    """
    Element ``Σ_μ α_μ dx_μ`` of ``Ω¹_{R_N}``.

    The dense basis of ``Ω¹_{R_N}`` is ``x^n dx_μ`` ordered by monomial first, then
    by ``μ``.
    """

    __slots__ = ('components',)

    def __init__(self, components: Sequence[TruncSeries]) -> None:
        assert len(components) > 0
        first = components[0]
        if len(components) != first.dim:
            raise MismatchError(
                f"{len(components)} components for a form on a {first.dim}-dim space"
            )
        for each in components:
            first.check_compatible(each)
        self.components: Tuple[TruncSeries, ...] = tuple(components)

    @property
    def dim(self) -> int:
        """Dimension of ``V``."""
        return self.components[0].dim

    @property
    def order(self) -> int:
        """Truncation order."""
        return self.components[0].order

    @classmethod
    def zero(cls, dim: int, order: int) -> 'OneForm':
        """The zero form."""
        return cls([TruncSeries.zero(dim, order)] * dim)

    @classmethod
    def basis_element(cls, dim: int, order: int, index: int) -> 'OneForm':
        """The ``index``-th form ``x^n dx_μ`` of the dense basis."""
        exponent, mu = basis_label(dim, order, index)
        components = [TruncSeries.zero(dim, order)] * dim
        components[mu] = TruncSeries.monomial(dim, order, exponent)
        return cls(components)

    def to_vector(self) -> List[Fraction]:
        """Dense coefficients on the basis ``x^n dx_μ``."""
        dense = [each.to_vector() for each in self.components]
        return [dense[mu][i] for i in range(len(dense[0])) for mu in range(self.dim)]

    @classmethod
    def from_vector(cls, dim: int, order: int, vector: Sequence[Fraction]) -> 'OneForm':
        """Inverse of :meth:`to_vector`."""
        return cls(
            [
                TruncSeries.from_vector(dim, order, list(vector[mu::dim]))
                for mu in range(dim)
            ]
        )

    def coefficient(self, exponent: Sequence[int], mu: int) -> Fraction:
        """Coefficient of ``x^exponent dx_mu``."""
        return self.components[mu].coefficient(exponent)

    def is_zero(self) -> bool:
        """Return `True` for the zero form."""
        return all(each.is_zero() for each in self.components)

    def __add__(self, other: 'OneForm') -> 'OneForm':
        return OneForm([a + b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> 'OneForm':
        return OneForm([-a for a in self.components])

    def __sub__(self, other: 'OneForm') -> 'OneForm':
        return self + (-other)

    def __mul__(self, other: Union[TruncSeries, Scalar]) -> 'OneForm':
        return OneForm([a * other for a in self.components])

    def __rmul__(self, other: Union[TruncSeries, Scalar]) -> 'OneForm':
        return self * other

    def jet_project(self, k: int) -> 'OneForm':
        """Project every coefficient to degree ``≤ k``."""
        return OneForm([jet_project(a, k) for a in self.components])

    def promote(self, order: int) -> 'OneForm':
        """Same coefficients at another truncation order."""
        return OneForm([a.promote(order) for a in self.components])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f'OneForm({list(self.components)!r})'


def basis_label(dim: int, order: int, index: int) -> Tuple[Exponent, int]:
    """Monomial and ``μ`` of the ``index``-th element of the dense basis of forms."""
    return monomials(dim, order)[index // dim], index % dim


def form_dimension(dim: int, order: int) -> int:
    """Dimension of ``Ω¹_{R_N}``."""
    return len(monomials(dim, order)) * dim


def exterior_d(f: TruncSeries) -> OneForm:
    """
    Exterior derivative ``df = Σ_μ ∂_μ f dx_μ``.

    >>> x = TruncSeries.variable(2, 2, 0)
    >>> y = TruncSeries.variable(2, 2, 1)
    >>> exterior_d(x * y) == OneForm([y, x])
    True
    """
    return OneForm([f.partial(mu) for mu in range(f.dim)])


class FormalVectorField:
    """
    Formal vector field ``Σ_μ v_μ ∂_μ`` vanishing at the origin.

    :raises AffineFieldError: A component has a non-zero constant term.
    """

    __slots__ = ('components',)

    def __init__(self, components: Sequence[TruncSeries]) -> None:
        assert len(components) > 0
        first = components[0]
        if len(components) != first.dim:
            raise MismatchError(
                f"{len(components)} components for a field on a {first.dim}-dim space"
            )
        for mu, each in enumerate(components):
            first.check_compatible(each)
            if ev0(each) != 0:
                raise AffineFieldError(
                    f"Component {mu} has constant term {ev0(each)}; fields must "
                    "vanish at the origin"
                )
        self.components: Tuple[TruncSeries, ...] = tuple(components)

    @property
    def dim(self) -> int:
        """Dimension of ``V``."""
        return self.components[0].dim

    @property
    def order(self) -> int:
        """Truncation order."""
        return self.components[0].order

    @classmethod
    def zero(cls, dim: int, order: int) -> 'FormalVectorField':
        """The zero field."""
        return cls([TruncSeries.zero(dim, order)] * dim)

    @classmethod
    def linear(
        cls, matrix: Sequence[Sequence[Scalar]], order: int
    ) -> 'FormalVectorField':
        """
        Linear field ``x ↦ A x``, i.e. ``v_μ = Σ_ν A_{μν} x_ν``.

        >>> str(FormalVectorField.linear([[0, 1], [-1, 0]], 2))
        'y ∂x + -x ∂y'
        """
        dim = len(matrix)
        return cls(
            [
                TruncSeries(
                    dim,
                    order,
                    {
                        tuple(int(i == nu) for i in range(dim)): matrix[mu][nu]
                        for nu in range(dim)
                    },
                )
                for mu in range(dim)
            ]
        )

    def linear_part(self) -> Matrix:
        """Matrix ``A`` of the linear part ``x ↦ A x``."""
        return [
            [
                each.coefficient(tuple(int(i == nu) for i in range(self.dim)))
                for nu in range(self.dim)
            ]
            for each in self.components
        ]

    def homogeneous_part(self, degree: int) -> 'FormalVectorField':
        """Terms of the given degree."""
        return FormalVectorField([c.homogeneous_part(degree) for c in self.components])

    def homogeneous_vector(self, degree: int) -> List[Fraction]:
        """Coordinates on ``P^degree(V) ⊗ V``: monomial-major, then component."""
        dense = [each.homogeneous_vector(degree) for each in self.components]
        return [dense[mu][i] for i in range(len(dense[0])) for mu in range(self.dim)]

    @classmethod
    def from_homogeneous_vector(
        cls, dim: int, order: int, degree: int, vector: Sequence[Fraction]
    ) -> 'FormalVectorField':
        """Inverse of :meth:`homogeneous_vector`."""
        return cls(
            [
                TruncSeries.from_homogeneous_vector(
                    dim, order, degree, list(vector[mu::dim])
                )
                for mu in range(dim)
            ]
        )

    def is_zero(self) -> bool:
        """Return `True` for the zero field."""
        return all(each.is_zero() for each in self.components)

    def is_linear(self) -> bool:
        """Return `True` if only degree one terms are present."""
        return self == self.homogeneous_part(1)

    def jet_project(self, k: int) -> 'FormalVectorField':
        """Project every component to degree ``≤ k``."""
        return FormalVectorField([jet_project(c, k) for c in self.components])

    def promote(self, order: int) -> 'FormalVectorField':
        """Same coefficients at another truncation order."""
        return FormalVectorField([c.promote(order) for c in self.components])

    def __add__(self, other: 'FormalVectorField') -> 'FormalVectorField':
        return FormalVectorField(
            [a + b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self) -> 'FormalVectorField':
        return FormalVectorField([-a for a in self.components])

    def __sub__(self, other: 'FormalVectorField') -> 'FormalVectorField':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'FormalVectorField':
        """Multiply by a rational number."""
        return FormalVectorField([a.scale(factor) for a in self.components])

    def bracket(self, other: 'FormalVectorField') -> 'FormalVectorField':
        """
        Lie bracket of vector fields, ``[v, w]_μ = L_v w_μ − L_w v_μ``.

        With this convention ``[Ax, Bx] = (BA − AB)x`` for linear fields.
        """
        return FormalVectorField(
            [
                lie_derivative_fn(self, w) - lie_derivative_fn(other, v)
                for v, w in zip(self.components, other.components)
            ]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalVectorField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f'FormalVectorField({list(self.components)!r})'

    def __str__(self) -> str:
        names = _variable_names(self.dim)
        terms = [
            f'{each} ∂{name}' if len(each.items()) == 1 else f'({each}) ∂{name}'
            for each, name in zip(self.components, names)
            if not each.is_zero()
        ]
        return ' + '.join(terms) if terms else '0'


def _check_field(v: FormalVectorField, f: TruncSeries) -> None:
    if (v.dim, v.order) != (f.dim, f.order):
        raise MismatchError(
            f"Field of (dim, order) = {(v.dim, v.order)} applied to "
            f"{(f.dim, f.order)}"
        )


def lie_derivative_fn(v: FormalVectorField, f: TruncSeries) -> TruncSeries:
    """
    Lie derivative ``L_v f = Σ_μ v_μ ∂_μ f``.

    Since `v` vanishes at the origin the result is exact at the truncation order.

    :raises MismatchError: `v` and `f` live on different rings.
    """
    _check_field(v, f)
    result = TruncSeries.zero(f.dim, f.order)
    for mu, component in enumerate(v.components):
        if not component.is_zero():
            result = result + component * f.partial(mu)
    return result


def lie_derivative_form(v: FormalVectorField, alpha: OneForm) -> OneForm:
    """
    Lie derivative of a one-form.

    Uses ``(L_v α)_μ = Σ_ν v_ν ∂_ν α_μ + α_ν ∂_μ v_ν``, which agrees with the Cartan
    rule ``L_v(f dg) = (L_v f) dg + f d(L_v g)``.
    """
    _check_field(v, alpha.components[0])
    components = []
    for mu, alpha_mu in enumerate(alpha.components):
        component = lie_derivative_fn(v, alpha_mu)
        for nu, alpha_nu in enumerate(alpha.components):
            if not alpha_nu.is_zero():
                component = component + alpha_nu * v.components[nu].partial(mu)
        components.append(component)

    return OneForm(components)


def lie_derivative_matrix(v: FormalVectorField, degree: int) -> Matrix:
    """
    Matrix of ``L_{v_l}`` on ``P^degree(V)`` in the monomial basis (columns are images).

    Only the linear part of `v` contributes, since higher terms raise the degree.
    """
    linear = FormalVectorField.linear(v.linear_part(), max(v.order, degree))
    basis = monomials_of_degree(v.dim, degree)
    columns = [
        lie_derivative_fn(
            linear, TruncSeries.monomial(v.dim, linear.order, exponent)
        ).homogeneous_vector(degree)
        for exponent in basis
    ]
    if not columns:
        return []
    return linalg.transpose(columns)
