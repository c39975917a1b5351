"""
The jet Lie algebra ``g_N = R_N ⊗ k`` and the transformations acting on it.

An element ``ξ = Σ_a ξ_a ⊗ e_a`` of ``g_N`` is stored as one series per basis element
of the fiber algebra ``k``. Its coordinates on ``P^n(V) ⊗ k`` are indexed by
``monomial · dim k + a``.

A lift of an action of ``p`` on the base is given by :class:`ActionData`: vector
fields ``v(p_i)`` and twists ``σ(p_i)``, so that ``p`` acts on ``g_N`` by

``D(p) = −L_{v(p)} + ad_{σ(p)}``.

Sign convention: ``v`` is an anti-homomorphism, ``v([p, q]) = −[v(p), v(q)]`` with the
bracket of :meth:`FormalVectorField.bracket`. A linear representation
``p ↦ A_p ∈ gl(V)`` gives such a ``v`` through the linear fields ``v(p) = A_p x``.
With this convention ``D`` is a homomorphism exactly when ``σ`` satisfies the
Maurer-Cartan equation, see :func:`normalform.mc_residual`.

Group elements act in log coordinates only: a gauge transformation is ``e^{ad_ξ}``
for ``ξ ∈ I ⊗ k``; a horizontal automorphism is substitution by a formal
diffeomorphism fixing the origin.
"""

from fractions import Fraction
from functools import lru_cache
import itertools
import logging
from math import factorial
from typing import (
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from . import linalg
from .decorators import log_calls
from .errors import (
    AffineFieldError,
    MismatchError,
    NotInvertibleError,
    NotNilpotentError,
)
from .liealg import LieAlgebra
from .linalg import Matrix, Vector
from .ring import (
    FormalVectorField,
    Scalar,
    TruncSeries,
    ev0,
    homogeneous_dimension,
    jet_project,
    lie_derivative_fn,
    monomials_of_degree,
)

_logger = logging.getLogger(__name__)


class JetElement:
    """
    Element of ``g_N = R_N ⊗ k``.

    :param algebra: The fiber algebra ``k``.
    :param components: ``ξ_a`` for the basis ``e_a`` of `algebra`.

    :raises MismatchError: Components live in different rings.
    """

    __slots__ = ('algebra', 'components')

    def __init__(self, algebra: LieAlgebra, components: Sequence[TruncSeries]) -> None:
        assert algebra.dim > 0, "The fiber algebra must not be trivial"
        if len(components) != algebra.dim:
            raise MismatchError(
                f"{len(components)} components for the {algebra.dim}-dim algebra "
                f"{algebra}"
            )
        first = components[0]
        for each in components:
            first.check_compatible(each)

        self.algebra = algebra
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
    def zero(cls, algebra: LieAlgebra, dim: int, order: int) -> 'JetElement':
        """The zero element."""
        return cls(algebra, [TruncSeries.zero(dim, order)] * algebra.dim)

    @classmethod
    def constant(
        cls, algebra: LieAlgebra, dim: int, order: int, vector: Sequence[Scalar]
    ) -> 'JetElement':
        """``1 ⊗ X`` for a coordinate vector ``X`` of `algebra`."""
        return cls(algebra, [TruncSeries.constant(dim, order, x) for x in vector])

    @classmethod
    def tensor(
        cls, series: TruncSeries, vector: Sequence[Scalar], algebra: LieAlgebra
    ) -> 'JetElement':
        """``f ⊗ X``."""
        return cls(algebra, [series.scale(x) for x in vector])

    def ev0(self) -> Vector:
        """Value at the origin, an element of ``k``."""
        return [ev0(each) for each in self.components]

    def is_zero(self) -> bool:
        """Return `True` for the zero element."""
        return all(each.is_zero() for each in self.components)

    def lowest_degree(self) -> Optional[int]:
        """Smallest degree of a stored term, `None` for zero."""
        lowest = (each.lowest_degree() for each in self.components)
        degrees = [d for d in lowest if d is not None]
        return min(degrees) if degrees else None

    def homogeneous_part(self, degree: int) -> 'JetElement':
        """Terms of the given degree."""
        return JetElement(
            self.algebra, [each.homogeneous_part(degree) for each in self.components]
        )

    def jet_project(self, k: int) -> 'JetElement':
        """
        Terms of degree at most `k`.

        :raises MismatchError: `k` is outside ``0..order``.
        """
        return JetElement(
            self.algebra, [jet_project(each, k) for each in self.components]
        )

    def promote(self, order: int) -> 'JetElement':
        """Same coefficients at another truncation order."""
        return JetElement(
            self.algebra, [each.promote(order) for each in self.components]
        )

    def homogeneous_vector(self, degree: int) -> List[Fraction]:
        """Coordinates on ``P^degree(V) ⊗ k``."""
        dense = [each.homogeneous_vector(degree) for each in self.components]
        return [
            dense[a][i]
            for i in range(homogeneous_dimension(self.dim, degree))
            for a in range(self.algebra.dim)
        ]

    @classmethod
    def from_homogeneous_vector(
        cls,
        algebra: LieAlgebra,
        dim: int,
        order: int,
        degree: int,
        vector: Sequence[Fraction],
    ) -> 'JetElement':
        """Inverse of :meth:`homogeneous_vector`."""
        return cls(
            algebra,
            [
                TruncSeries.from_homogeneous_vector(
                    dim, order, degree, list(vector[a :: algebra.dim])
                )
                for a in range(algebra.dim)
            ],
        )

    def check_compatible(self, other: 'JetElement') -> None:
        """
        :raises MismatchError: `other` lives in another jet algebra.
        """
        self.algebra.check_same(other.algebra)
        self.components[0].check_compatible(other.components[0])

    def __add__(self, other: 'JetElement') -> 'JetElement':
        self.check_compatible(other)
        return JetElement(
            self.algebra, [a + b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self) -> 'JetElement':
        return JetElement(self.algebra, [-a for a in self.components])

    def __sub__(self, other: 'JetElement') -> 'JetElement':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'JetElement':
        """Multiply by a rational number."""
        return JetElement(self.algebra, [a.scale(factor) for a in self.components])

    def __mul__(self, other: Union[TruncSeries, Scalar]) -> 'JetElement':
        if isinstance(other, TruncSeries):
            return JetElement(self.algebra, [other * a for a in self.components])
        return self.scale(other)

    def __rmul__(self, other: Union[TruncSeries, Scalar]) -> 'JetElement':
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetElement):
            return NotImplemented
        return self.algebra == other.algebra and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f'JetElement({self.algebra!r}, {list(self.components)!r})'

    def __str__(self) -> str:
        terms = [
            f'({each}) ⊗ {name}'
            for each, name in zip(self.components, self.algebra.basis_names)
            if not each.is_zero()
        ]
        return ' + '.join(terms) if terms else '0'


def bracket(xi: JetElement, eta: JetElement) -> JetElement:
    """
    Bracket ``[f ⊗ X, g ⊗ Y] = fg ⊗ [X, Y]``, extended bilinearly and truncated.

    :raises MismatchError: The elements live in different jet algebras.
    """
    xi.check_compatible(eta)
    result = [TruncSeries.zero(xi.dim, xi.order)] * xi.algebra.dim
    products: Dict[Tuple[int, int], TruncSeries] = {}
    for i, j, k, c in xi.algebra.nonzero:
        one, another = xi.components[i], eta.components[j]
        if one.is_zero() or another.is_zero():
            continue
        if (i, j) not in products:
            products[(i, j)] = one * another
        result[k] = result[k] + products[(i, j)].scale(c)

    return JetElement(xi.algebra, result)


def lie_derivative(v: FormalVectorField, xi: JetElement) -> JetElement:
    """``L_v ξ``, the Lie derivative applied to every component."""
    return JetElement(
        xi.algebra, [lie_derivative_fn(v, each) for each in xi.components]
    )


class ActionData:
    """
    Lift of a ``p``-action to ``g_N``: fields ``v(p_i)`` and twists ``σ(p_i)``.

    Only the shapes are checked on construction. The anti-homomorphism property is
    checked by :meth:`check_antihomomorphism` and the Maurer-Cartan equation by
    :func:`normalform.mc_residual`, so that broken data can still be represented.

    :param algebra: The acting algebra ``p``.
    :param fiber: The fiber algebra ``k``.
    :param fields: ``v(p_i)`` for the basis of `algebra`.
    :param twists: ``σ(p_i)`` for the basis of `algebra`.

    :raises MismatchError: Shapes do not fit together.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        fiber: LieAlgebra,
        fields: Sequence[FormalVectorField],
        twists: Sequence[JetElement],
    ) -> None:
        if not len(fields) == len(twists) == algebra.dim:
            raise MismatchError(
                f"{len(fields)} fields and {len(twists)} twists for the "
                f"{algebra.dim}-dim algebra {algebra}"
            )
        assert algebra.dim > 0, "The acting algebra must not be trivial"
        for field, twist in zip(fields, twists):
            fiber.check_same(twist.algebra)
            if (field.dim, field.order) != (twist.dim, twist.order):
                raise MismatchError(
                    f"Field on (dim, order) = {(field.dim, field.order)} with twist on "
                    f"{(twist.dim, twist.order)}"
                )
            fields[0].components[0].check_compatible(field.components[0])

        self.algebra = algebra
        self.fiber = fiber
        self.fields: Tuple[FormalVectorField, ...] = tuple(fields)
        self.twists: Tuple[JetElement, ...] = tuple(twists)
        self.sigma0: Tuple[Vector, ...] = tuple(twist.ev0() for twist in twists)
        self.linear_parts: Tuple[Matrix, ...] = tuple(
            field.linear_part() for field in fields
        )

    @property
    def dim(self) -> int:
        """Dimension of ``V``."""
        return self.fields[0].dim

    @property
    def order(self) -> int:
        """Truncation order."""
        return self.fields[0].order

    @classmethod
    def linear(
        cls,
        algebra: LieAlgebra,
        fiber: LieAlgebra,
        matrices: Sequence[Sequence[Sequence[Scalar]]],
        order: int,
        sigma0: Optional[Sequence[Sequence[Scalar]]] = None,
    ) -> 'ActionData':
        """
        Linear fields ``v(p_i) = A_i x`` with constant twists.

        :param sigma0: ``σ(p_i)`` as coordinate vectors of `fiber`; zero if omitted.
        """
        dim = len(matrices[0])
        constants = sigma0 if sigma0 is not None else [[0] * fiber.dim] * algebra.dim
        return cls(
            algebra,
            fiber,
            [FormalVectorField.linear(matrix, order) for matrix in matrices],
            [JetElement.constant(fiber, dim, order, x) for x in constants],
        )

    def field(self, p: Sequence[Scalar]) -> FormalVectorField:
        """``v(p)`` for a coordinate vector of ``p``."""
        result = FormalVectorField.zero(self.dim, self.order)
        for coefficient, field in zip(p, self.fields):
            if coefficient:
                result = result + field.scale(coefficient)
        return result

    def twist(self, p: Sequence[Scalar]) -> JetElement:
        """``σ(p)`` for a coordinate vector of ``p``."""
        result = JetElement.zero(self.fiber, self.dim, self.order)
        for coefficient, twist in zip(p, self.twists):
            if coefficient:
                result = result + twist.scale(coefficient)
        return result

    def linear_part(self, p: Sequence[Scalar]) -> Matrix:
        """Matrix of ``v_l(p)``."""
        result = linalg.zeros(self.dim, self.dim)
        for coefficient, matrix in zip(p, self.linear_parts):
            if coefficient:
                result = linalg.add(result, linalg.scale(Fraction(coefficient), matrix))
        return result

    def constant_twist(self, p: Sequence[Scalar]) -> Vector:
        """``σ0(p) = ev0(σ(p))``."""
        result = self.fiber.zero()
        for coefficient, value in zip(p, self.sigma0):
            if coefficient:
                result = [r + coefficient * x for r, x in zip(result, value)]
        return result

    def check_antihomomorphism(self) -> bool:
        """Check ``v([p_i, p_j]) = −[v(p_i), v(p_j)]`` on basis pairs (exact)."""
        for i, j in itertools.combinations(range(self.algebra.dim), 2):
            image = self.field(
                self.algebra.bracket(
                    self.algebra.basis_vector(i), self.algebra.basis_vector(j)
                )
            )
            if image != -self.fields[i].bracket(self.fields[j]):
                _logger.info(f"Fields break the anti-homomorphism on ({i}, {j})")
                return False
        return True

    def with_fields(self, fields: Sequence[FormalVectorField]) -> 'ActionData':
        """Same twists with other fields."""
        return ActionData(self.algebra, self.fiber, fields, self.twists)

    def with_twists(self, twists: Sequence[JetElement]) -> 'ActionData':
        """Same fields with other twists."""
        return ActionData(self.algebra, self.fiber, self.fields, twists)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ActionData):
            return NotImplemented
        return (self.algebra, self.fiber, self.fields, self.twists) == (
            other.algebra,
            other.fiber,
            other.fields,
            other.twists,
        )

    def __hash__(self) -> int:
        return hash((self.fields, self.twists))

    def __repr__(self) -> str:
        return (
            f'ActionData({self.algebra!r}, {self.fiber!r}, fields={list(self.fields)!r}'
            f', twists={list(self.twists)!r})'
        )


def apply_derivation(
    action: ActionData, p: Sequence[Scalar], xi: JetElement
) -> JetElement:
    """``D(p)ξ = −L_{v(p)}ξ + [σ(p), ξ]``."""
    return bracket(action.twist(p), xi) - lie_derivative(action.field(p), xi)


def _check_nilpotent(xi: JetElement) -> None:
    if any(xi.ev0()):
        raise NotNilpotentError(
            f"Log coordinate {xi} has constant term {xi.ev0()}; it must lie in I ⊗ k"
        )


class GaugeTransform:
    """
    Gauge transformation ``e^{ad_ξ}`` in its log coordinate ``ξ ∈ I ⊗ k``.

    :raises NotNilpotentError: ``ξ`` has a constant term.
    """

    __slots__ = ('xi',)

    def __init__(self, xi: JetElement) -> None:
        _check_nilpotent(xi)
        self.xi = xi

    @classmethod
    def identity(cls, algebra: LieAlgebra, dim: int, order: int) -> 'GaugeTransform':
        """``ξ = 0``."""
        return cls(JetElement.zero(algebra, dim, order))

    def is_identity(self) -> bool:
        """Return `True` for ``ξ = 0``."""
        return self.xi.is_zero()

    def inverse(self) -> 'GaugeTransform':
        """``e^{−ad_ξ}``."""
        return GaugeTransform(-self.xi)

    def compose(self, other: 'GaugeTransform') -> 'GaugeTransform':
        """`self` after `other`, ``log(e^ξ e^η)``."""
        return GaugeTransform(bch(self.xi, other.xi))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaugeTransform):
            return NotImplemented
        return self.xi == other.xi

    def __hash__(self) -> int:
        return hash(self.xi)

    def __repr__(self) -> str:
        return f'GaugeTransform({self.xi!r})'


def _ad_series(
    xi: JetElement, eta: JetElement, weights: Iterator[Fraction]
) -> JetElement:
    # Σ_m c_m ad_ξ^m η, where the m-th term is the previous one times weights[m].
    # Terms vanish after `order` steps since ξ ∈ I ⊗ k.
    result = eta
    term = eta
    for _ in range(xi.order):
        term = bracket(xi, term).scale(next(weights))
        if term.is_zero():
            break
        result = result + term
    return result


def gauge_apply(gauge: GaugeTransform, eta: JetElement) -> JetElement:
    """``e^{ad_ξ} η = Σ_m ad_ξ^m η / m!``, exact at the truncation order."""
    return _ad_series(gauge.xi, eta, (Fraction(1, m) for m in itertools.count(1)))


def _f_series(xi: JetElement, eta: JetElement) -> JetElement:
    # Σ_m ad_ξ^m η / (m+1)!
    return _ad_series(xi, eta, (Fraction(1, m + 1) for m in itertools.count(1)))


def gauge_on_twist(gauge: GaugeTransform, action: ActionData) -> ActionData:
    """
    Transform the twists so that ``D`` becomes ``e^{ad_ξ} ∘ D ∘ e^{−ad_ξ}``.

    ``σ(p) ↦ e^{ad_ξ}σ(p) + Σ_m ad_ξ^m(L_{v(p)}ξ) / (m+1)!``; the fields are
    unchanged.
    """
    if gauge.is_identity():
        return action
    return action.with_twists(
        [
            gauge_apply(gauge, twist)
            + _f_series(gauge.xi, lie_derivative(field, gauge.xi))
            for field, twist in zip(action.fields, action.twists)
        ]
    )


# Baker-Campbell-Hausdorff ###


def _compositions(length: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # Sequences of pairs (r, s) != (0, 0) with Σ(r + s) <= length.
    if length == 0:
        yield ()
        return
    yield ()
    for total in range(1, length + 1):
        for r in range(total + 1):
            for rest in _compositions(length - total):
                yield ((r, total - r),) + rest


@lru_cache(maxsize=None)
def dynkin_coefficients(depth: int) -> Tuple[Tuple[str, Fraction], ...]:
    """
    Coefficients of right nested brackets in ``log(e^X e^Y)`` up to `depth` letters.

    Dynkin's formula, aggregated per word over ``{X, Y}``; a word ``w_1 ... w_m``
    stands for ``[w_1, [w_2, ... [w_{m−1}, w_m]]]``.

    >>> dict(dynkin_coefficients(2))['XY']
    Fraction(1, 2)
    """
    coefficients: Dict[str, Fraction] = {}
    for pairs in _compositions(depth):
        if not pairs:
            continue
        n = len(pairs)
        word = ''.join('X' * r + 'Y' * s for r, s in pairs)
        denominator = len(word)
        for r, s in pairs:
            denominator *= factorial(r) * factorial(s)
        sign = 1 if n % 2 else -1
        if len(word) >= 2 and word[-2:] == 'YX':
            # [.., [Y, X]] = −[.., [X, Y]]
            word = word[:-2] + 'XY'
            sign = -sign
        coefficients[word] = coefficients.get(word, Fraction(0)) + Fraction(
            sign, n * denominator
        )

    return tuple(
        (word, c)
        for word, c in sorted(
            coefficients.items(), key=lambda item: (len(item[0]), item[0])
        )
        if c != 0 and not (len(word) >= 2 and word[-1] == word[-2])
    )


@log_calls(_logger, log_result=False)
def bch(xi: JetElement, eta: JetElement) -> JetElement:
    """
    ``log(e^ξ e^η)`` by the Dynkin series.

    Brackets of more than ``N`` elements of ``I ⊗ k`` vanish, so the truncated series
    is exact.

    :raises NotNilpotentError: An argument has a constant term.
    """
    _check_nilpotent(xi)
    _check_nilpotent(eta)
    xi.check_compatible(eta)

    nested: Dict[str, JetElement] = {}

    def _nested(word: str) -> JetElement:
        if word not in nested:
            letter = xi if word[0] == 'X' else eta
            nested[word] = (
                letter if len(word) == 1 else bracket(letter, _nested(word[1:]))
            )
        return nested[word]

    result = JetElement.zero(xi.algebra, xi.dim, xi.order)
    for word, coefficient in dynkin_coefficients(xi.order):
        term = _nested(word)
        if not term.is_zero():
            result = result + term.scale(coefficient)
    return result


# Formal diffeomorphisms ###


class FormalDiffeo:
    """
    Formal diffeomorphism ``h`` of ``(V, 0)`` given by its components ``h_μ(x)``.

    :raises AffineFieldError: A component has a constant term.
    :raises NotInvertibleError: The linear part is singular.
    """

    __slots__ = ('components',)

    def __init__(self, components: Sequence[TruncSeries]) -> None:
        first = components[0]
        if len(components) != first.dim:
            raise MismatchError(
                f"{len(components)} components for a map of a {first.dim}-dim space"
            )
        for mu, each in enumerate(components):
            first.check_compatible(each)
            if ev0(each) != 0:
                raise AffineFieldError(
                    f"Component {mu} has constant term {ev0(each)}; diffeomorphisms "
                    "must fix the origin"
                )
        self.components: Tuple[TruncSeries, ...] = tuple(components)
        if linalg.det(self.linear_part()) == 0:
            raise NotInvertibleError(f"Linear part of {self} is singular")

    @property
    def dim(self) -> int:
        """Dimension of ``V``."""
        return self.components[0].dim

    @property
    def order(self) -> int:
        """Truncation order."""
        return self.components[0].order

    @classmethod
    def identity(cls, dim: int, order: int) -> 'FormalDiffeo':
        """``x ↦ x``."""
        return cls([TruncSeries.variable(dim, order, mu) for mu in range(dim)])

    @classmethod
    def linear(cls, matrix: Sequence[Sequence[Scalar]], order: int) -> 'FormalDiffeo':
        """``x ↦ A x``."""
        return cls(FormalVectorField.linear(matrix, order).components)

    def linear_part(self) -> Matrix:
        """Matrix of ``j¹h``."""
        return [
            [
                each.coefficient(tuple(int(i == nu) for i in range(self.dim)))
                for nu in range(self.dim)
            ]
            for each in self.components
        ]

    def is_identity(self) -> bool:
        """Return `True` for ``x ↦ x``."""
        return self == FormalDiffeo.identity(self.dim, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalDiffeo):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f'FormalDiffeo({list(self.components)!r})'

    def __str__(self) -> str:
        return '(' + ', '.join(str(each) for each in self.components) + ')'


def compose_diffeo(one: FormalDiffeo, another: FormalDiffeo) -> FormalDiffeo:
    """``one ∘ another``, truncated."""
    return FormalDiffeo(
        [each.substitute(another.components) for each in one.components]
    )


def invert_diffeo(h: FormalDiffeo) -> FormalDiffeo:
    """
    Compositional inverse, degree by degree.

    Writing ``h(x) = A x + H(x)``, the iteration ``g ← A⁻¹(y − H ∘ g)`` started at
    ``g = A⁻¹ y`` gains one correct degree per step.
    """
    dim, order = h.dim, h.order
    matrix = h.linear_part()
    inverse = linalg.inverse(matrix)
    linear = FormalVectorField.linear(matrix, order).components
    higher = [each - lin for each, lin in zip(h.components, linear)]
    variables = [TruncSeries.variable(dim, order, mu) for mu in range(dim)]

    def _apply_inverse(vector: Sequence[TruncSeries]) -> List[TruncSeries]:
        result = []
        for row in inverse:
            total = TruncSeries.zero(dim, order)
            for coefficient, each in zip(row, vector):
                if coefficient:
                    total = total + each.scale(coefficient)
            result.append(total)
        return result

    components = _apply_inverse(variables)
    for _ in range(order - 1):
        components = _apply_inverse(
            [y - each.substitute(components) for y, each in zip(variables, higher)]
        )

    return FormalDiffeo(components)


_TargetT = TypeVar('_TargetT', TruncSeries, JetElement, FormalVectorField, ActionData)


def horizontal_apply(h: FormalDiffeo, target: _TargetT) -> _TargetT:
    """
    Transport along ``h``: ``f ↦ f ∘ h⁻¹`` on series and jet elements, push forward
    ``(h.v)_μ = (L_v h_μ) ∘ h⁻¹`` on fields, both on :class:`ActionData`.

    Then ``h.(L_v f) = L_{h.v}(h.f)`` and ``h ∘ D ∘ h⁻¹ = −L_{h.v} + ad_{h.σ}``.

    :raises MismatchError: `target` lives on another ring.
    """
    inverse = invert_diffeo(h).components
    return _transport(h, inverse, target)


def _transport(
    h: FormalDiffeo, inverse: Sequence[TruncSeries], target: _TargetT
) -> _TargetT:
    if isinstance(target, TruncSeries):
        h.components[0].check_compatible(target)
        return target.substitute(inverse)

    if isinstance(target, JetElement):
        return JetElement(
            target.algebra, [_transport(h, inverse, each) for each in target.components]
        )

    if isinstance(target, FormalVectorField):
        return FormalVectorField(
            [
                _transport(h, inverse, lie_derivative_fn(target, each))
                for each in h.components
            ]
        )

    if isinstance(target, ActionData):
        return ActionData(
            target.algebra,
            target.fiber,
            [_transport(h, inverse, field) for field in target.fields],
            [_transport(h, inverse, twist) for twist in target.twists],
        )

    raise TypeError(f"Cannot transport {type(target).__name__}")


def scramble(
    action: ActionData,
    gauge: Optional[GaugeTransform] = None,
    diffeo: Optional[FormalDiffeo] = None,
) -> ActionData:
    """Apply a gauge transformation, then a horizontal automorphism."""
    if gauge is not None:
        action = gauge_on_twist(gauge, action)
    if diffeo is not None:
        action = horizontal_apply(diffeo, action)
    return action


def homogeneous_basis(
    algebra: LieAlgebra, dim: int, order: int, degree: int
) -> List[JetElement]:
    """Basis ``x^n ⊗ e_a`` of ``P^degree(V) ⊗ k`` in coordinate order."""
    return [
        JetElement.tensor(
            TruncSeries.monomial(dim, order, exponent), algebra.basis_vector(a), algebra
        )
        for exponent in monomials_of_degree(dim, degree)
        for a in range(algebra.dim)
    ]
