"""
Normal forms of formal vector fields and of vertical twists.

Twists ``σ : p → g_N`` are degree one elements of the differential graded Lie algebra
``L = Λ•p* ⊗ g_N``; they describe a lift of the ``p``-action exactly when the
Maurer-Cartan residual

``(p₁, p₂) ↦ −L_{v(p₁)}σ(p₂) + L_{v(p₂)}σ(p₁) − σ([p₁, p₂]) + [σ(p₁), σ(p₂)]``

vanishes. All normalizations work degree by degree: the degree ``n`` part of the
datum is split by a linear operator on ``P^n(V) ⊗ W`` and the removable part is
cancelled by a transformation that leaves lower degrees alone. Each step is recorded
in a :class:`NormalFormTranscript`, which :func:`replay_transcript` re-applies using
only :mod:`jetlie` primitives.
"""

from fractions import Fraction
import logging
from typing import (
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from . import linalg
from .cohomology import PModule, solve_coboundary, wedge_basis
from .decorators import log_calls
from .errors import (
    MismatchError,
    NotSemisimpleError,
    PreconditionError,
    ResonanceError,
)
from .jetlie import (
    ActionData,
    FormalDiffeo,
    GaugeTransform,
    JetElement,
    bracket,
    compose_diffeo,
    gauge_on_twist,
    horizontal_apply,
    lie_derivative,
)
from .liealg import (
    COMPACT,
    NONCOMPACT_SIMPLE,
    CartanData,
    LieAlgebra,
    chevalley_jordan,
    spectrum,
)
from .linalg import Matrix, Vector
from .ring import (
    FormalVectorField,
    TruncSeries,
    homogeneous_dimension,
    lie_derivative_matrix,
    monomials_of_degree,
)

_logger = logging.getLogger(__name__)

VECTOR_FIELD = 'vectorfield'
"""Transcript kind of normalizations by formal diffeomorphisms."""

TWIST = 'twist'
"""Transcript kind of normalizations by gauge transformations."""


class DGLAElement:
    """
    Alternating map ``p^degree → g_N``, an element of ``Λ^degree p* ⊗ g_N``.

    :param algebra: The algebra ``p``.
    :param degree: Number of arguments.
    :param values: Values on the wedge basis, see :func:`cohomology.wedge_basis`.
    """

    def __init__(
        self, algebra: LieAlgebra, degree: int, values: Sequence[JetElement]
    ) -> None:
        assert len(values) == len(wedge_basis(algebra.dim, degree)), (
            "One value per wedge basis element is needed"
        )
        self.algebra = algebra
        self.degree = degree
        self.values: Tuple[JetElement, ...] = tuple(values)

    def is_zero(self) -> bool:
        """Return `True` if all values vanish."""
        return all(value.is_zero() for value in self.values)

    def lowest_degree(self) -> Optional[int]:
        """Smallest polynomial degree among the values, `None` for zero."""
        degrees = [
            d for d in (value.lowest_degree() for value in self.values) if d is not None
        ]
        return min(degrees) if degrees else None

    def homogeneous_vector(self, degree: int) -> List[Fraction]:
        """Cochain coordinates of one degree, in ``Λ^k p* ⊗ P^n(V) ⊗ k``."""
        return [x for value in self.values for x in value.homogeneous_vector(degree)]

    def value(self, indices: Tuple[int, ...]) -> JetElement:
        """Value on ``(p_{i_1}, ..., p_{i_k})`` for increasing indices."""
        return self.values[wedge_basis(self.algebra.dim, self.degree).index(indices)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DGLAElement):
            return NotImplemented
        return (self.algebra, self.degree, self.values) == (
            other.algebra,
            other.degree,
            other.values,
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.values))

    def __repr__(self) -> str:
        return f'DGLAElement({self.algebra!r}, {self.degree}, {list(self.values)!r})'


def mc_residual(action: ActionData) -> DGLAElement:
    """Maurer-Cartan residual of the twists of `action`, a 2-cochain."""
    p = action.algebra
    values = []
    for i, j in wedge_basis(p.dim, 2):
        commutator = action.twist(p.bracket(p.basis_vector(i), p.basis_vector(j)))
        values.append(
            lie_derivative(action.fields[j], action.twists[i])
            - lie_derivative(action.fields[i], action.twists[j])
            - commutator
            + bracket(action.twists[i], action.twists[j])
        )
    return DGLAElement(p, 2, values)


def twisted_module(
    action: ActionData, degree: int, chi: Optional[Sequence[Vector]] = None
) -> PModule:
    """
    The ``p``-module ``P^degree(V) ⊗_χ k`` with ``p·ξ = −L_{v_l(p)}ξ + [χ(p), ξ]``.

    :param chi: Constant twist ``χ(p_i)``; ``σ0`` of `action` if omitted.
    """
    chi = action.sigma0 if chi is None else chi
    fiber = action.fiber
    size = homogeneous_dimension(action.dim, degree)
    matrices = []
    for field, value in zip(action.fields, chi):
        lie = linalg.kron(
            lie_derivative_matrix(field, degree), linalg.identity(fiber.dim)
        )
        ad = linalg.kron(linalg.identity(size), fiber.ad_matrix(value))
        matrices.append(linalg.add(ad, linalg.scale(Fraction(-1), lie)))
    return PModule(
        action.algebra, size * fiber.dim, matrices, name=f'P^{degree}(V) ⊗_χ {fiber}'
    )


class ShiftedDifferential(NamedTuple):
    """
    Differential ``δ_χ = δ + [χ, ·]`` of ``L`` shifted by a constant twist ``χ``.

    :param action: Supplies the fields; its twists are ignored.
    :param chi: ``χ(p_i)``, which must be a homomorphism ``p → k``.
    """

    action: ActionData
    chi: Tuple[Vector, ...]

    def check(self) -> None:
        """
        :raises PreconditionError: ``χ`` is not a homomorphism.
        """
        if not self.action.algebra.is_homomorphism(self.chi, self.action.fiber):
            raise PreconditionError(f"Constant twist {self.chi} is not a homomorphism")

    def module(self, degree: int) -> PModule:
        """The module ``P^degree(V) ⊗_χ k``."""
        return twisted_module(self.action, degree, self.chi)

    def act(self, p: Sequence[Fraction], xi: JetElement) -> JetElement:
        """``p·ξ = −L_{v(p)}ξ + [χ(p), ξ]``."""
        chi = [
            sum((c * x[a] for c, x in zip(p, self.chi)), Fraction(0))
            for a in range(self.action.fiber.dim)
        ]
        constant = JetElement.constant(self.action.fiber, xi.dim, xi.order, chi)
        return bracket(constant, xi) - lie_derivative(self.action.field(p), xi)


class TranscriptStep(NamedTuple):
    """
    One degree of a normalization.

    :param degree: Polynomial degree ``n`` treated by the step.
    :param rank: Rank of the operator that was inverted.
    :param dimension: Dimension of the space it acts on.
    :param generator: Coordinates of the correction: ``φ ∈ P^n(V) ⊗ V`` for
      ``x ↦ x + φ(x)``, or ``ξ_n ∈ P^n(V) ⊗ k`` for ``e^{ad_{ξ_n}}``.
    """

    degree: int
    rank: int
    dimension: int
    generator: Tuple[Fraction, ...]


class NormalFormTranscript(NamedTuple):
    """
    Replayable record of a normalization.

    :param kind: :data:`VECTOR_FIELD` or :data:`TWIST`.
    :param method: Name of the normalization.
    :param source: Input field or action.
    :param steps: Per degree corrections in the order they were applied.
    :param result: Output field or action.
    """

    kind: str
    method: str
    source: Union[FormalVectorField, ActionData]
    steps: Tuple[TranscriptStep, ...]
    result: Union[FormalVectorField, ActionData]


class FieldNormalForm(NamedTuple):
    """Output of the normalizations by formal diffeomorphisms, ``result = h.source``."""

    result: Union[FormalVectorField, ActionData]
    diffeo: FormalDiffeo
    transcript: NormalFormTranscript


class TwistNormalForm(NamedTuple):
    """Output of the twist normalizations, ``action = gauge.source``."""

    action: ActionData
    gauge: GaugeTransform
    transcript: NormalFormTranscript


class ResonanceReport(NamedTuple):
    """
    Surjectivity of ``ad(v_l)`` on ``P^k(V) ⊗ V`` for ``k = 2..N``.

    Exact ranks always decide the question, so there is no undecided outcome.

    :param free: `True` if the operator is surjective in every degree.
    :param first_resonant_degree: Smallest degree where it is not.
    :param ranks: ``(degree, rank, dimension)`` per degree.
    """

    free: bool
    first_resonant_degree: Optional[int]
    ranks: Tuple[Tuple[int, int, int], ...]


class LiftResult(NamedTuple):
    """
    Outcome of lifting a twist by one degree.

    :param action: The lifted action, `None` if obstructed.
    :param obstruction: Cochain coordinates of the degree ``k`` residual when its
      class does not vanish.
    :param degree: The degree ``k``.
    """

    action: Optional[ActionData]
    obstruction: Optional[Tuple[Fraction, ...]]
    degree: int


class TorusReduction(NamedTuple):
    """
    Necessary conditions for an equivariant twist to be gauge-equivalent to ``σ0``.

    :param reduces: `True` if all components above degree zero vanish.
    :param noncentral_degrees: Degrees with a component outside the center of ``k``.
    :param spectrum_in_iz_period_2pi: Whether ``Spec(v_l) ∪ Spec(ad_{σ0}) ⊆ iℤ``,
      decided exactly from the factored characteristic polynomials. Periods are
      normalized to ``2π``: the flows of ``v_l`` and ``ad_{σ0}`` have period ``2π``
      exactly then, which is membership in ``2πiℤ`` for period ``1``.
    """

    reduces: bool
    noncentral_degrees: Tuple[int, ...]
    spectrum_in_iz_period_2pi: bool


# Vector fields ###


def _field_basis(dim: int, order: int, degree: int) -> List[FormalVectorField]:
    # x^n ∂_μ, monomial-major as in `FormalVectorField.homogeneous_vector`.
    basis = []
    for exponent in monomials_of_degree(dim, degree):
        for mu in range(dim):
            components = [TruncSeries.zero(dim, order)] * dim
            components[mu] = TruncSeries.monomial(dim, order, exponent)
            basis.append(FormalVectorField(components))
    return basis


def homological_operator(
    linear: Sequence[Sequence[Fraction]], degree: int, order: Optional[int] = None
) -> Matrix:
    """Matrix of ``φ ↦ [A x, φ]`` on ``P^degree(V) ⊗ V`` (columns are images)."""
    order = max(degree, order or 0)
    field = FormalVectorField.linear(linear, order)
    columns = [
        field.bracket(phi).homogeneous_vector(degree)
        for phi in _field_basis(len(linear), order, degree)
    ]
    return linalg.transpose(columns)


def _near_identity(
    dim: int, order: int, degree: int, phi: Sequence[Fraction]
) -> FormalDiffeo:
    correction = FormalVectorField.from_homogeneous_vector(dim, order, degree, phi)
    identity = FormalDiffeo.identity(dim, order)
    return FormalDiffeo(
        [x + c for x, c in zip(identity.components, correction.components)]
    )


def _split(operator: Matrix, vector: Sequence[Fraction], size: int) -> Vector:
    # Component of `vector` in the image of a semisimple `operator` along its kernel.
    image = linalg.row_basis(linalg.transpose(operator), size) if operator else []
    kernel = linalg.nullspace(operator, size)
    coordinates = linalg.coordinates(image + kernel, vector)
    assert coordinates is not None, "Image and kernel must span the space"
    if not image:
        return [Fraction(0)] * size
    return linalg.matvec(linalg.transpose(image), coordinates[: len(image)])


@log_calls(_logger, log_result=False)
def poincare_dulac(
    v: FormalVectorField, order: Optional[int] = None
) -> FieldNormalForm:
    """
    Poincaré-Dulac normal form ``w = h.v``.

    In degree ``k`` the defect is split along ``image ⊕ kernel`` of ``ad(S)``, ``S``
    the semisimple part of the linear part, and the image component is removed by
    ``x ↦ x + φ(x)`` solving ``[v_l, φ] = −image component``. The result satisfies
    ``j¹w = j¹v`` and ``[S x, w − j¹w] = 0``.

    :param order: Truncation order; that of `v` if omitted.
    """
    if order is not None:
        v = v.promote(order)
    dim, order = v.dim, v.order

    linear = v.linear_part()
    semisimple, _ = chevalley_jordan(linear)
    w = v
    total = FormalDiffeo.identity(dim, order)
    steps = []
    for degree in range(2, order + 1):
        operator = homological_operator(linear, degree, order)
        semisimple_operator = homological_operator(semisimple, degree, order)
        size = homogeneous_dimension(dim, degree) * dim
        removable = _split(semisimple_operator, w.homogeneous_vector(degree), size)
        rank = linalg.rank(operator, size)
        _logger.debug(f"Degree {degree}: homological operator rank {rank}/{size}")

        if any(removable):
            phi = linalg.solve(operator, [-x for x in removable], size)
            assert phi is not None, "ad(v_l) must be invertible on the image of ad(S)"
            step = _near_identity(dim, order, degree, phi)
            w = horizontal_apply(step, w)
            total = compose_diffeo(step, total)
        else:
            phi = [Fraction(0)] * size
        steps.append(TranscriptStep(degree, rank, size, tuple(phi)))
    # endfor

    transcript = NormalFormTranscript(
        VECTOR_FIELD, 'poincare_dulac', v, tuple(steps), w
    )
    return FieldNormalForm(w, total, transcript)


def is_resonance_free(
    linear: Sequence[Sequence[Fraction]], order: int
) -> ResonanceReport:
    """
    Check surjectivity of ``ad(v_l)`` on ``P^k(V) ⊗ V`` for ``k = 2..order`` by rank.

    No eigenvalues are needed.
    """
    dim = len(linear)
    ranks = []
    first = None
    for degree in range(2, order + 1):
        size = homogeneous_dimension(dim, degree) * dim
        rank = linalg.rank(homological_operator(linear, degree, order), size)
        ranks.append((degree, rank, size))
        if rank < size and first is None:
            first = degree
    return ResonanceReport(first is None, first, tuple(ranks))


# Twists ###


@log_calls(_logger, log_result=False)
def mc_obstruction_lift(
    action: ActionData, degree: int, chi: Optional[Sequence[Vector]] = None
) -> LiftResult:
    """
    Correct the twists in degree `degree` so that the residual vanishes there.

    With ``h`` the degree ``k`` part of :func:`mc_residual`, a solution of
    ``δ_χ η = −h`` on ``P^k(V) ⊗_χ k`` gives the lift ``σ + η``; otherwise the class
    of ``h`` is the obstruction.

    :param chi: Shift of the differential, ``σ0`` if omitted.

    :raises PreconditionError: The residual does not vanish below `degree`, or ``χ``
      is not a homomorphism.
    """
    assert 1 <= degree <= action.order, f"Degree {degree} outside 1..{action.order}"
    p = action.algebra
    if p.dim < 2:
        return LiftResult(action, None, degree)

    residual = mc_residual(action)
    lowest = residual.lowest_degree()
    if lowest is not None and lowest < degree:
        raise PreconditionError(
            f"Maurer-Cartan residual is non-zero in degree {lowest} < {degree}"
        )

    shifted = ShiftedDifferential(
        action, tuple(action.sigma0 if chi is None else chi)
    )
    shifted.check()
    h = residual.homogeneous_vector(degree)
    if not any(h):
        return LiftResult(action, None, degree)

    module = shifted.module(degree)
    eta = solve_coboundary(module, 2, [-x for x in h])
    if eta is None:
        _logger.warning(f"Maurer-Cartan obstruction in degree {degree}")
        return LiftResult(None, tuple(h), degree)

    size = module.dim
    twists = [
        twist
        + JetElement.from_homogeneous_vector(
            action.fiber,
            action.dim,
            action.order,
            degree,
            eta[i * size : (i + 1) * size],
        )
        for i, twist in enumerate(action.twists)
    ]
    return LiftResult(action.with_twists(twists), None, degree)


def _check_mc(action: ActionData) -> None:
    if not mc_residual(action).is_zero():
        raise PreconditionError("Maurer-Cartan residual of the twists is non-zero")


def _gauge_step(
    action: ActionData, degree: int, vector: Sequence[Fraction]
) -> Tuple[ActionData, GaugeTransform]:
    xi = JetElement.from_homogeneous_vector(
        action.fiber, action.dim, action.order, degree, vector
    )
    gauge = GaugeTransform(xi)
    return gauge_on_twist(gauge, action), gauge


@log_calls(_logger, log_result=False)
def normalize_twist_semisimple(action: ActionData) -> TwistNormalForm:
    """
    Gauge the twists of a semisimple ``p`` to their constant part ``σ0``.

    In degree ``n`` the part ``σ_n`` is a 1-cocycle of ``p`` in ``P^n(V) ⊗_{σ0} k``;
    it is the coboundary of ``ξ_n`` (Whitehead's first lemma) and ``e^{ad_{ξ_n}}``
    removes it. The total gauge is ``ξ_N ∗ ... ∗ ξ_1`` (BCH, last step outermost).

    :raises NotSemisimpleError: The Killing form of ``p`` is degenerate.
    :raises PreconditionError: The Maurer-Cartan residual is non-zero, or ``σ0`` is
      non-zero although ``p`` has no compact ideals and ``k`` is compact.
    """
    action.algebra.check_semisimple()
    _check_mc(action)
    if (
        NONCOMPACT_SIMPLE in action.algebra.tags
        and COMPACT in action.fiber.tags
        and any(any(x) for x in action.sigma0)
    ):
        raise PreconditionError(
            f"Non-zero constant twist from {action.algebra} to compact {action.fiber}"
        )

    current = action
    total = GaugeTransform.identity(action.fiber, action.dim, action.order)
    steps = []
    for degree in range(1, action.order + 1):
        module = twisted_module(action, degree)
        cochain = [
            x for twist in current.twists for x in twist.homogeneous_vector(degree)
        ]
        if not any(cochain):
            zero = (Fraction(0),) * module.dim
            steps.append(TranscriptStep(degree, 0, module.dim, zero))
            continue

        xi = solve_coboundary(module, 1, cochain)
        if xi is None:
            raise PreconditionError(
                f"First cohomology does not vanish in degree {degree}"
            )
        current, gauge = _gauge_step(current, degree, xi)
        total = gauge.compose(total)
        steps.append(TranscriptStep(degree, module.dim, module.dim, tuple(xi)))
        _logger.debug(f"Degree {degree}: twist gauged")
    # endfor

    constants = [
        JetElement.constant(action.fiber, action.dim, action.order, x)
        for x in action.sigma0
    ]
    assert list(current.twists) == constants, "Twists must be constant after gauging"

    transcript = NormalFormTranscript(
        TWIST, 'semisimple', action, tuple(steps), current
    )
    return TwistNormalForm(current, total, transcript)


def _oned_action(field: FormalVectorField, twist: JetElement) -> ActionData:
    if (field.dim, field.order) != (twist.dim, twist.order):
        raise MismatchError("Field and twist live on different rings")
    return ActionData(LieAlgebra.abelian(1, 'R'), twist.algebra, [field], [twist])


@log_calls(_logger, log_result=False)
def normalize_twist_oned_torus(
    field: FormalVectorField, twist: JetElement, cartan: CartanData
) -> TwistNormalForm:
    """
    Gauge a twist of ``p = ℝ`` into ``R ⊗ t``.

    In degree ``n`` the operator ``T_n = −L_{v_l} + ad_{σ0}`` must be invertible on
    ``P^n(V) ⊗ m``, ``m`` the sum of the root spaces; the ``m``-component of ``σ_n`` is
    then ``T_n ξ_n`` for a unique ``ξ_n ∈ P^n(V) ⊗ m``.

    :raises PreconditionError: ``σ0`` is not in the torus.
    :raises ResonanceError: ``T_n`` is singular on ``P^n(V) ⊗ m``.
    """
    action = _oned_action(field, twist)
    fiber = action.fiber
    torus = [list(t) for t in cartan.torus]
    complement = [list(m) for m in cartan.complement]
    assert len(torus) + len(complement) == fiber.dim, "t and m must span k"
    if not linalg.in_span(torus, action.sigma0[0]):
        raise PreconditionError(
            f"Constant twist {action.sigma0[0]} is not in the torus"
        )

    mixed = torus + complement
    current = action
    total = GaugeTransform.identity(fiber, action.dim, action.order)
    steps = []
    for degree in range(1, action.order + 1):
        operator = twisted_module(action, degree).matrices[0]
        blocks = homogeneous_dimension(action.dim, degree)
        size = blocks * len(complement)
        embedding: Matrix = []
        restricted: Matrix = []
        rank = 0
        if complement:
            # Columns: x^n ⊗ m_l.
            embedding = linalg.transpose(
                [
                    [Fraction(0)] * (block * fiber.dim)
                    + list(m)
                    + [Fraction(0)] * ((blocks - block - 1) * fiber.dim)
                    for block in range(blocks)
                    for m in complement
                ]
            )
            restricted = linalg.matmul(operator, embedding)
            rank = linalg.rank(restricted, size)
        if rank < size:
            raise ResonanceError(
                f"−L_(v_l) + ad_(σ0) is singular on P^{degree}(V) ⊗ m", degree=degree
            )

        sigma = current.twists[0].homogeneous_vector(degree)
        target: Vector = []
        for block in range(blocks):
            value = sigma[block * fiber.dim : (block + 1) * fiber.dim]
            coordinates = linalg.coordinates(mixed, value)
            assert coordinates is not None
            target.extend(
                linalg.matvec(linalg.transpose(complement), coordinates[len(torus) :])
                if complement
                else [Fraction(0)] * fiber.dim
            )

        if any(target):
            solution = linalg.solve(restricted, target, size)
            assert solution is not None
            xi = linalg.matvec(embedding, solution)
            current, gauge = _gauge_step(current, degree, xi)
            total = gauge.compose(total)
        else:
            xi = [Fraction(0)] * (blocks * fiber.dim)
        steps.append(TranscriptStep(degree, rank, size, tuple(xi)))
    # endfor

    transcript = NormalFormTranscript(
        TWIST, 'oned_torus', action, tuple(steps), current
    )
    return TwistNormalForm(current, total, transcript)


@log_calls(_logger, log_result=False)
def normalize_twist_oned_equivariant(
    field: FormalVectorField, twist: JetElement
) -> TwistNormalForm:
    """
    Gauge a twist of ``p = ℝ`` into the kernel of ``ν ↦ −L_{v_l}ν + [σ0, ν]``.

    In degree ``n`` the part ``σ_n`` is split along image and kernel of
    ``T_n = −L_{v_l} + ad_{σ0}`` and the image part is removed.

    :raises NotSemisimpleError: ``v_l`` has a non-zero nilpotent part, or ``T_n`` does
      not split its space into image and kernel.
    """
    action = _oned_action(field, twist)
    _, nilpotent = chevalley_jordan(action.linear_parts[0])
    if not linalg.is_zero(nilpotent):
        raise NotSemisimpleError("Linear part of the field is not semisimple")

    current = action
    total = GaugeTransform.identity(action.fiber, action.dim, action.order)
    steps = []
    for degree in range(1, action.order + 1):
        operator = twisted_module(action, degree).matrices[0]
        size = len(operator)
        rank = linalg.rank(operator, size)
        if linalg.rank(linalg.matmul(operator, operator), size) != rank:
            raise NotSemisimpleError(
                f"−L_(v_l) + ad_(σ0) is not semisimple in degree {degree}"
            )

        removable = _split(operator, current.twists[0].homogeneous_vector(degree), size)
        if any(removable):
            xi = linalg.solve(operator, removable, size)
            assert xi is not None
            current, gauge = _gauge_step(current, degree, xi)
            total = gauge.compose(total)
        else:
            xi = [Fraction(0)] * size
        steps.append(TranscriptStep(degree, rank, size, tuple(xi)))
    # endfor

    transcript = NormalFormTranscript(
        TWIST, 'oned_equivariant', action, tuple(steps), current
    )
    return TwistNormalForm(current, total, transcript)


def _in_integer_lattice(matrix: Matrix) -> bool:
    # Non-exact eigenvalues have irreducible minimal polynomials of degree >= 2 without
    # roots in ℚ(i), so they are never in iℤ.
    return all(
        eigenvalue.value is not None
        and eigenvalue.value.re == 0
        and eigenvalue.value.im.denominator == 1
        for eigenvalue in spectrum(matrix).eigenvalues
    )


def torus_reduction_check(
    field: FormalVectorField, twist: JetElement
) -> TorusReduction:
    """
    Check whether an equivariant twist of ``p = ℝ`` is its constant part.

    Reports the degrees whose components are not central in ``k`` and whether the
    spectra of ``v_l`` and ``ad_{σ0}`` lie in ``iℤ`` (periods normalized to ``2π``).
    Integrability of the action cannot be decided from jets, so only these necessary
    conditions are checked.
    """
    fiber = twist.algebra
    noncentral = []
    for degree in range(1, twist.order + 1):
        vector = twist.homogeneous_vector(degree)
        for block in range(homogeneous_dimension(twist.dim, degree)):
            value = vector[block * fiber.dim : (block + 1) * fiber.dim]
            if any(value) and not linalg.is_zero(fiber.ad_matrix(value)):
                noncentral.append(degree)
                break
    # endfor

    reduces = (twist - JetElement.constant(
        fiber, twist.dim, twist.order, twist.ev0()
    )).is_zero()

    integral = _in_integer_lattice(field.linear_part()) and _in_integer_lattice(
        fiber.ad_matrix(twist.ev0())
    )
    return TorusReduction(reduces, tuple(noncentral), integral)


# Simultaneous linearization ###


def vector_field_module(action: ActionData, degree: int) -> PModule:
    """The ``p``-module ``P^degree(V) ⊗ V`` with ``p·φ = −[v_l(p), φ]``."""
    size = homogeneous_dimension(action.dim, degree) * action.dim
    matrices = [
        linalg.scale(Fraction(-1), homological_operator(linear, degree, action.order))
        for linear in action.linear_parts
    ]
    return PModule(action.algebra, size, matrices, name=f'P^{degree}(V) ⊗ V')


@log_calls(_logger, log_result=False)
def linearize_action_semisimple(action: ActionData) -> FieldNormalForm:
    """
    Formal simultaneous linearization of the fields of a semisimple ``p``.

    In degree ``k`` the higher parts ``c(p) = w_k(p)`` form a 1-cocycle of the module
    :func:`vector_field_module`; solving ``δφ = c`` gives ``x ↦ x + φ(x)`` removing
    them. The twists are transported along.

    :raises NotSemisimpleError: The Killing form of ``p`` is degenerate.
    :raises PreconditionError: The fields are not an anti-homomorphism.
    :raises ResonanceError: A cocycle is not a coboundary (never for semisimple ``p``).
    """
    action.algebra.check_semisimple()
    if not action.check_antihomomorphism():
        raise PreconditionError("Fields are not an anti-homomorphism of the algebra")

    dim, order = action.dim, action.order
    current = action
    total = FormalDiffeo.identity(dim, order)
    steps = []
    for degree in range(2, order + 1):
        module = vector_field_module(action, degree)
        cochain = [
            x for field in current.fields for x in field.homogeneous_vector(degree)
        ]
        if not any(cochain):
            zero = (Fraction(0),) * module.dim
            steps.append(TranscriptStep(degree, 0, module.dim, zero))
            continue

        phi = solve_coboundary(module, 1, cochain)
        if phi is None:
            raise ResonanceError(
                f"Fields cannot be linearized in degree {degree}", degree=degree
            )
        step = _near_identity(dim, order, degree, phi)
        current = horizontal_apply(step, current)
        total = compose_diffeo(step, total)
        steps.append(TranscriptStep(degree, module.dim, module.dim, tuple(phi)))
    # endfor

    assert all(field.is_linear() for field in current.fields)
    transcript = NormalFormTranscript(
        VECTOR_FIELD, 'hermann', action, tuple(steps), current
    )
    return FieldNormalForm(current, total, transcript)


# Replay ###


def _replay_step(
    kind: str, current: Union[FormalVectorField, ActionData], step: TranscriptStep
) -> Union[FormalVectorField, ActionData]:
    if not any(step.generator):
        return current

    if kind == VECTOR_FIELD:
        return horizontal_apply(
            _near_identity(current.dim, current.order, step.degree, step.generator),
            current,
        )
    assert isinstance(current, ActionData)
    gauged, _ = _gauge_step(current, step.degree, step.generator)
    return gauged


def replay_transcript(
    transcript: NormalFormTranscript,
) -> Union[FormalVectorField, ActionData]:
    """
    Re-apply the steps of `transcript` to its source.

    Only :mod:`jetlie` transformations are used, not the solvers that produced the
    steps.
    """
    current = transcript.source
    for step in transcript.steps:
        current = _replay_step(transcript.kind, current, step)
    # endfor

    return current


class DegreeCertificate(NamedTuple):
    """
    Check of one transcript step on replay.

    :param degree: Degree of the step.
    :param applied: Whether the step has a non-zero correction.
    :param settled: Whether the terms of this degree equal those of the recorded
      result right after the step.
    """

    degree: int
    applied: bool
    settled: bool


def _degree_part(
    target: Union[FormalVectorField, ActionData], degree: int
) -> Tuple[object, ...]:
    if isinstance(target, FormalVectorField):
        return (target.homogeneous_part(degree),)
    return tuple(field.homogeneous_part(degree) for field in target.fields) + tuple(
        twist.homogeneous_part(degree) for twist in target.twists
    )


def certify_transcript(
    transcript: NormalFormTranscript,
) -> Tuple[DegreeCertificate, ...]:
    """
    Replay `transcript` one step at a time and check each degree on its own.

    Steps are applied in increasing degree and a step of degree ``n`` only changes
    terms of degree ``>= n``, so the degree ``n`` terms are final once it ran. A step
    out of order is never settled.
    """
    current = transcript.source
    certificates = []
    previous = -1
    for step in transcript.steps:
        current = _replay_step(transcript.kind, current, step)
        settled = step.degree > previous and _degree_part(
            current, step.degree
        ) == _degree_part(transcript.result, step.degree)
        certificates.append(
            DegreeCertificate(step.degree, any(step.generator), settled)
        )
        previous = step.degree
    # endfor

    return tuple(certificates)


def verify_transcript(transcript: NormalFormTranscript) -> bool:
    """
    Check that replaying `transcript` reproduces its result exactly and that every
    step is certified by :func:`certify_transcript`.
    """
    return replay_transcript(transcript) == transcript.result and all(
        each.settled for each in certify_transcript(transcript)
    )

