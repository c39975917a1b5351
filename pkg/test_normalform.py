"""Tests for `normalform` module."""

import random
from typing import Optional, Sequence

import pytest

from .errors import (
    NotSemisimpleError,
    PreconditionError,
    ResonanceError,
)
from .jetlie import (
    ActionData,
    JetElement,
    bracket,
    gauge_on_twist,
    horizontal_apply,
    lie_derivative,
    scramble,
)
from .liealg import (
    LieAlgebra,
    real_plane,
    semisimple_part,
    sl2r,
    standard_cartan,
    su2,
)
from .linalg import Matrix
from . import linalg
from .normalform import (
    DGLAElement,
    DegreeCertificate,
    ShiftedDifferential,
    TWIST,
    VECTOR_FIELD,
    ResonanceReport,
    certify_transcript,
    is_resonance_free,
    linearize_action_semisimple,
    mc_obstruction_lift,
    mc_residual,
    normalize_twist_oned_equivariant,
    normalize_twist_oned_torus,
    normalize_twist_semisimple,
    poincare_dulac,
    replay_transcript,
    torus_reduction_check,
    twisted_module,
    vector_field_module,
    verify_transcript,
)
from .ring import FormalVectorField, TruncSeries
from .testutils import (
    DEFAULT_SEEDS,
    FIELD_SEEDS,
    RECOVERY_SEEDS,
    random_diffeo,
    random_field,
    random_gauge,
    random_jet_element,
    random_matrix,
    rows,
)

_SL2R_MATRICES = (rows([1, 0], [0, -1]), rows([0, 1], [0, 0]), rows([0, 0], [1, 0]))

_SO3_MATRICES = (
    rows([0, 0, 0], [0, 0, -1], [0, 1, 0]),
    rows([0, 0, 1], [0, 0, 0], [-1, 0, 0]),
    rows([0, -1, 0], [1, 0, 0], [0, 0, 0]),
)

_ROTATION = rows([0, 1], [-1, 0])
"""``y∂_x − x∂_y``."""


def _sl2r_action(order: int = 3) -> ActionData:
    return ActionData.linear(sl2r(), su2(), _SL2R_MATRICES, order)


def _su2_action(order: int = 2) -> ActionData:
    # su2 rotating ℝ³, twisted by the identity su2 → su2.
    return ActionData.linear(
        su2(),
        su2(),
        _SO3_MATRICES,
        order,
        sigma0=[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    )


def _constant(
    algebra: LieAlgebra, dim: int, order: int, vector: Sequence[int]
) -> JetElement:
    return JetElement.constant(algebra, dim, order, vector)


# mc_residual ###


def test__mc_residual__zero() -> None:
    """Test that zero and constant homomorphism twists satisfy Maurer-Cartan."""
    assert mc_residual(_sl2r_action()).is_zero()
    assert mc_residual(_su2_action()).is_zero()


def test__mc_residual__not_a_homomorphism() -> None:
    """Test ``−σ([p, q]) + [σ(p), σ(q)]`` for a constant non-homomorphism twist."""
    fiber = su2()
    action = ActionData.linear(
        sl2r(), fiber, _SL2R_MATRICES, 2, sigma0=[[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    )

    residual = mc_residual(action)

    assert residual.degree == 2
    assert residual.value((0, 1)) == _constant(fiber, 2, 2, [-2, 0, 0])
    assert residual.value((0, 2)) == _constant(fiber, 2, 2, [0, 2, 0])
    assert residual.value((1, 2)) == _constant(fiber, 2, 2, [0, 0, 1])
    assert residual.lowest_degree() == 0


# Modules ###


@pytest.mark.parametrize('degree', (1, 2))
def test__twisted_module__representation(degree: int) -> None:
    """Test that the twisted modules and field modules are representations."""
    assert twisted_module(_sl2r_action(), degree).verify()
    assert twisted_module(_su2_action(), degree).verify()
    assert vector_field_module(_sl2r_action(), degree + 1).verify()
    assert vector_field_module(_su2_action(3), degree + 1).verify()


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__ShiftedDifferential__act(seed: int) -> None:
    """Test that the module matrices represent ``ξ ↦ −L_{v(p)}ξ + [χ(p), ξ]``."""
    rng = random.Random(seed)
    action = _su2_action()
    shifted = ShiftedDifferential(action, tuple(action.sigma0))
    shifted.check()
    xi = random_jet_element(rng, action.fiber, 3, 2).homogeneous_part(2)

    module = shifted.module(2)
    for i in range(3):
        p = action.algebra.basis_vector(i)
        assert shifted.act(p, xi).homogeneous_vector(2) == linalg.matvec(
            module.matrices[i], xi.homogeneous_vector(2)
        )


def test__ShiftedDifferential__check() -> None:
    """Test that the shift must be a homomorphism."""
    action = _sl2r_action()
    shifted = ShiftedDifferential(action, ([0, 0, 1], [0, 0, 0], [0, 0, 0]))

    with pytest.raises(PreconditionError):
        shifted.check()


# Poincaré-Dulac ###


def _commutes_with_semisimple_part(
    w: FormalVectorField, semisimple: Matrix
) -> bool:
    linear = FormalVectorField.linear(w.linear_part(), w.order)
    return FormalVectorField.linear(semisimple, w.order).bracket(w - linear).is_zero()


def test__poincare_dulac__linear() -> None:
    """Test that linear fields are already normal."""
    v = FormalVectorField.linear(rows([3, 0], [1, -1]), 3)

    result = poincare_dulac(v)

    assert result.result == v
    assert result.diffeo.is_identity()
    assert result.transcript.kind == VECTOR_FIELD
    assert [step.degree for step in result.transcript.steps] == [2, 3]


def test__poincare_dulac__non_resonant() -> None:
    """Test ``2x∂_x + x²∂_x ↦ 2x∂_x``."""
    v = FormalVectorField([TruncSeries(1, 3, {(1,): 2, (2,): 1})])

    result = poincare_dulac(v)

    assert result.result == FormalVectorField.linear(rows([2]), 3)
    assert horizontal_apply(result.diffeo, v) == result.result
    assert verify_transcript(result.transcript)


def test__certify_transcript() -> None:
    """Test that each step settles its degree, and that tampering is located."""
    v = FormalVectorField([TruncSeries(1, 3, {(1,): 2, (2,): 1})])
    transcript = poincare_dulac(v).transcript

    certificates = certify_transcript(transcript)
    assert [each.degree for each in certificates] == [2, 3]
    assert all(each.settled for each in certificates)
    assert certificates[0] == DegreeCertificate(2, True, True)

    cubic = FormalVectorField([TruncSeries(1, 3, {(3,): 1})])
    tampered = transcript._replace(result=transcript.result + cubic)
    assert [each.settled for each in certify_transcript(tampered)] == [True, False]
    assert not verify_transcript(tampered)

    reordered = transcript._replace(steps=transcript.steps[::-1])
    assert certify_transcript(reordered)[1].settled is False



def test__poincare_dulac__resonant() -> None:
    """Test that the resonant term of ``x∂_x + 2y∂_y + x²∂_y`` stays."""
    v = FormalVectorField(
        [
            TruncSeries(2, 3, {(1, 0): 1}),
            TruncSeries(2, 3, {(0, 1): 2, (2, 0): 1}),
        ]
    )

    result = poincare_dulac(v)

    assert result.result == v
    assert result.diffeo.is_identity()


def test__poincare_dulac__order() -> None:
    """Test that the order argument re-truncates the input."""
    v = FormalVectorField([TruncSeries(1, 2, {(1,): 2, (2,): 1})])

    result = poincare_dulac(v, order=4)

    assert result.result == FormalVectorField.linear(rows([2]), 4)


def test__poincare_dulac__nilpotent_part() -> None:
    """Test that a Jordan block with ``S = 1`` linearizes everything above degree 1."""
    matrix = rows([1, 1], [0, 1])
    v = FormalVectorField.linear(matrix, 3) + FormalVectorField(
        [TruncSeries(2, 3, {(0, 2): 1, (3, 0): 2}), TruncSeries(2, 3, {(1, 1): -1})]
    )

    result = poincare_dulac(v)

    assert result.result == FormalVectorField.linear(matrix, 3)
    assert horizontal_apply(result.diffeo, v) == result.result


@pytest.mark.parametrize(
    'seed, matrix, semisimple',
    (
        (0, rows([1, 0], [0, 2]), rows([1, 0], [0, 2])),
        (1, _ROTATION, _ROTATION),
        (2, rows([1, 0], [0, -1]), rows([1, 0], [0, -1])),
        (3, rows([0, 1], [0, 0]), rows([0, 0], [0, 0])),
    ),
)
def test__poincare_dulac__fixed_linear(
    seed: int, matrix: Matrix, semisimple: Matrix
) -> None:
    """Test ``[S, w − j¹w] = 0``, conjugacy and replay for chosen linear parts."""
    rng = random.Random(seed)
    v = FormalVectorField.linear(matrix, 3) + random_field(rng, 2, 3, low=2)

    result = poincare_dulac(v)

    assert result.result.linear_part() == matrix
    assert _commutes_with_semisimple_part(result.result, semisimple)
    assert horizontal_apply(result.diffeo, v) == result.result
    assert replay_transcript(result.transcript) == result.result
    assert result.result.jet_project(1) == v.jet_project(1)


@pytest.mark.parametrize('seed', FIELD_SEEDS)
def test__poincare_dulac__random(seed: int) -> None:
    """Test the normal form of random fields with random rational linear parts."""
    rng = random.Random(seed)
    dim = 1 + seed % 3
    matrix = random_matrix(rng, dim)
    v = FormalVectorField.linear(matrix, 3) + random_field(rng, dim, 3, low=2)

    result = poincare_dulac(v)

    assert result.result.jet_project(1) == v.jet_project(1)
    assert _commutes_with_semisimple_part(result.result, semisimple_part(matrix))
    assert horizontal_apply(result.diffeo, v) == result.result
    assert replay_transcript(result.transcript) == result.result
    if is_resonance_free(matrix, 3).free:
        assert result.result == FormalVectorField.linear(matrix, 3)


# is_resonance_free ###


@pytest.mark.parametrize(
    'matrix, order, free, first',
    (
        (rows([1, 0], [0, 3]), 3, False, 3),
        (rows([0, 0], [0, 0]), 3, False, 2),
        (rows([1, 0], [0, -1]), 3, False, 3),
        (rows([1, 0], [0, 2]), 3, False, 2),
        (rows([1, 0], [0, 1]), 3, True, None),
        (rows([1, 0], [0, 3]), 2, True, None),
    ),
)
def test__is_resonance_free(
    matrix: Matrix, order: int, *, free: bool, first: Optional[int]
) -> None:
    """Test resonance detection by rank."""
    report = is_resonance_free(matrix, order)

    assert report.free is free
    assert report.first_resonant_degree == first


def test__is_resonance_free__ranks() -> None:
    """Test the reported ranks and the trivial order."""
    assert is_resonance_free(rows([1, 0], [0, 1]), 3) == ResonanceReport(
        True, None, ((2, 6, 6), (3, 8, 8))
    )
    assert is_resonance_free(rows([1, 0], [0, 3]), 3).ranks[1] == (3, 7, 8)
    assert is_resonance_free(rows([0]), 1) == ResonanceReport(True, None, ())


# mc_obstruction_lift ###


def _obstructed_action(order: int = 3) -> ActionData:
    # p = ℝ², v = 0, σ(p1) = x ⊗ e1, σ(p2) = x ⊗ e2: residual x² ⊗ e3.
    fiber = su2()
    x = TruncSeries.variable(1, order, 0)
    return ActionData(
        real_plane(),
        fiber,
        [FormalVectorField.zero(1, order)] * 2,
        [
            JetElement.tensor(x, [1, 0, 0], fiber),
            JetElement.tensor(x, [0, 1, 0], fiber),
        ],
    )


def test__mc_obstruction_lift__already_valid() -> None:
    """Test that a valid lift is returned unchanged."""
    action = _sl2r_action()

    result = mc_obstruction_lift(action, 2)

    assert result.action == action
    assert result.obstruction is None


def test__mc_obstruction_lift__obstructed() -> None:
    """Test that a non-exact residual is returned as the obstruction."""
    action = _obstructed_action()
    assert mc_residual(action).value((0, 1)) == JetElement.tensor(
        TruncSeries.variable(1, 3, 0).power(2), [0, 0, 1], su2()
    )

    result = mc_obstruction_lift(action, 2)

    assert result.action is None
    assert result.obstruction == (0, 0, 1)
    assert result.degree == 2


def test__mc_obstruction_lift__lifted() -> None:
    """Test that an exact residual is cancelled."""
    # p = ℝ², v(p1) = x∂_x, v(p2) = 0, σ(p2) = x ⊗ e1: residual −x ⊗ e1.
    fiber = su2()
    x = TruncSeries.variable(1, 3, 0)
    action = ActionData(
        real_plane(),
        fiber,
        [FormalVectorField.linear(rows([1]), 3), FormalVectorField.zero(1, 3)],
        [JetElement.zero(fiber, 1, 3), JetElement.tensor(x, [1, 0, 0], fiber)],
    )
    assert mc_residual(action).lowest_degree() == 1

    result = mc_obstruction_lift(action, 1)

    assert result.obstruction is None
    assert result.action is not None
    residual = mc_residual(result.action)
    assert not any(residual.homogeneous_vector(1))
    assert result.action.twists[1].homogeneous_part(1).is_zero()


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__mc_obstruction_lift__semisimple(seed: int) -> None:
    """Test that lifts over a semisimple algebra are never obstructed."""
    rng = random.Random(seed)
    action = _su2_action()
    perturbed = action.with_twists(
        [
            twist + random_jet_element(rng, action.fiber, 3, 2).homogeneous_part(1)
            for twist in action.twists
        ]
    )

    result = mc_obstruction_lift(perturbed, 1)

    assert result.obstruction is None
    assert result.action is not None
    assert not any(mc_residual(result.action).homogeneous_vector(1))


def test__mc_obstruction_lift__PreconditionError() -> None:
    """Test the checks on lower degrees and on the shift."""
    action = _obstructed_action()

    with pytest.raises(PreconditionError):
        _ = mc_obstruction_lift(action, 3)

    with pytest.raises(PreconditionError):
        _ = mc_obstruction_lift(action, 2, chi=[[1, 0, 0], [0, 1, 0]])


# normalize_twist_semisimple ###


def test__normalize_twist_semisimple__constant() -> None:
    """Test that constant homomorphism twists need no gauge."""
    action = _su2_action()

    result = normalize_twist_semisimple(action)

    assert result.action == action
    assert result.gauge.is_identity()
    assert result.transcript.kind == TWIST
    assert not any(any(step.generator) for step in result.transcript.steps)


@pytest.mark.parametrize('seed', RECOVERY_SEEDS)
def test__normalize_twist_semisimple__sl2r(seed: int) -> None:
    """Test that a scrambled zero twist of ``sl(2, ℝ)`` in ``su(2)`` is gauged to 0."""
    rng = random.Random(seed)
    action = _sl2r_action()
    scrambled = scramble(action, random_gauge(rng, action.fiber, 2, 3))

    result = normalize_twist_semisimple(scrambled)

    assert result.action == action
    assert gauge_on_twist(result.gauge, scrambled) == action
    assert action.algebra.is_homomorphism(result.action.sigma0, action.fiber)
    assert verify_transcript(result.transcript)
    assert mc_residual(result.action).is_zero()


@pytest.mark.parametrize('seed', RECOVERY_SEEDS)
def test__normalize_twist_semisimple__su2(seed: int) -> None:
    """Test that a scrambled identity twist ``su(2) → su(2)`` is recovered."""
    rng = random.Random(seed)
    action = _su2_action()
    scrambled = scramble(action, random_gauge(rng, action.fiber, 3, 2))

    result = normalize_twist_semisimple(scrambled)

    assert result.action == action
    assert gauge_on_twist(result.gauge, scrambled) == action
    assert action.algebra.is_homomorphism(result.action.sigma0, action.fiber)
    assert verify_transcript(result.transcript)
    assert [twist.ev0() for twist in result.action.twists] == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]


def test__normalize_twist_semisimple__errors() -> None:
    """Test the preconditions."""
    not_semisimple = ActionData.linear(
        real_plane(), su2(), [rows([1, 0], [0, 0]), rows([0, 0], [0, 1])], 2
    )
    with pytest.raises(NotSemisimpleError):
        _ = normalize_twist_semisimple(not_semisimple)

    not_mc = ActionData.linear(
        sl2r(), su2(), _SL2R_MATRICES, 2, sigma0=[[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    )
    with pytest.raises(PreconditionError):
        _ = normalize_twist_semisimple(not_mc)


# One-dimensional p ###


def test__normalize_twist_oned_torus__root_vector() -> None:
    """Test that ``x ⊗ e1`` over ``x∂_x`` is gauged away."""
    fiber = su2()
    field = FormalVectorField.linear(rows([1]), 3)
    twist = JetElement.tensor(TruncSeries.variable(1, 3, 0), [1, 0, 0], fiber)

    result = normalize_twist_oned_torus(field, twist, standard_cartan(fiber))

    assert result.action.twists[0].is_zero()
    assert verify_transcript(result.transcript)


def test__normalize_twist_oned_torus__into_torus() -> None:
    """Test that all components end up in the torus ``ℝ e3``."""
    fiber = su2()
    field = FormalVectorField.linear(rows([1, 0], [0, 2]), 3)
    x = TruncSeries.variable(2, 3, 0)
    y = TruncSeries.variable(2, 3, 1)
    twist = (
        _constant(fiber, 2, 3, [0, 0, 1])
        + JetElement.tensor(x, [1, 0, 2], fiber)
        + JetElement.tensor(x * y, [0, 1, 0], fiber)
    )

    result = normalize_twist_oned_torus(field, twist, standard_cartan(fiber))

    normal = result.action.twists[0]
    assert normal.ev0() == [0, 0, 1]
    assert normal.components[0].is_zero()
    assert normal.components[1].is_zero()
    assert normal.homogeneous_part(1) == JetElement.tensor(x, [0, 0, 2], fiber)
    assert gauge_on_twist(result.gauge, result.transcript.source) == result.action


def test__normalize_twist_oned_torus__ResonanceError() -> None:
    """Test that ``−L_{v_l} + ad_{σ0}`` singular on ``P^1(V) ⊗ m`` is reported."""
    fiber = su2()
    field = FormalVectorField.linear(_ROTATION, 2)

    with pytest.raises(ResonanceError) as exception:
        _ = normalize_twist_oned_torus(
            field, _constant(fiber, 2, 2, [0, 0, 1]), standard_cartan(fiber)
        )

    assert exception.value.degree == 1


def test__normalize_twist_oned_torus__PreconditionError() -> None:
    """Test that ``σ0`` must lie in the torus."""
    fiber = su2()

    with pytest.raises(PreconditionError):
        _ = normalize_twist_oned_torus(
            FormalVectorField.linear(rows([1]), 2),
            _constant(fiber, 1, 2, [1, 0, 0]),
            standard_cartan(fiber),
        )


def _equivariance_defect(field: FormalVectorField, twist: JetElement) -> JetElement:
    constant = _constant(twist.algebra, twist.dim, twist.order, twist.ev0())
    return bracket(constant, twist) - lie_derivative(field.jet_project(1), twist)


def test__normalize_twist_oned_equivariant__constant() -> None:
    """Test that constant twists stay."""
    fiber = su2()
    field = FormalVectorField.linear(_ROTATION, 3)
    twist = _constant(fiber, 2, 3, [0, 0, 1])

    result = normalize_twist_oned_equivariant(field, twist)

    assert result.action.twists[0] == twist
    assert result.gauge.is_identity()


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
@pytest.mark.parametrize('sigma0', ([0, 0, 0], [0, 0, 1]))
def test__normalize_twist_oned_equivariant__rotation(
    seed: int, sigma0: Sequence[int]
) -> None:
    """Test that the normal form commutes with the rotation action."""
    rng = random.Random(seed)
    fiber = su2()
    field = FormalVectorField.linear(_ROTATION, 3)
    twist = _constant(fiber, 2, 3, sigma0) + random_jet_element(rng, fiber, 2, 3)

    result = normalize_twist_oned_equivariant(field, twist)

    normal = result.action.twists[0]
    assert normal.ev0() == list(sigma0)
    assert _equivariance_defect(field, normal).is_zero()
    assert replay_transcript(result.transcript) == result.action


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__normalize_twist_oned_equivariant__round_trip(seed: int) -> None:
    """Test that a scrambled zero twist over ``x∂_x`` is recovered exactly."""
    rng = random.Random(seed)
    fiber = su2()
    field = FormalVectorField.linear(rows([1]), 3)
    action = ActionData(
        LieAlgebra.abelian(1, 'R'), fiber, [field], [JetElement.zero(fiber, 1, 3)]
    )
    scrambled = scramble(action, random_gauge(rng, fiber, 1, 3))

    result = normalize_twist_oned_equivariant(field, scrambled.twists[0])

    assert result.action.twists[0].is_zero()
    assert torus_reduction_check(field, result.action.twists[0]).reduces


def test__normalize_twist_oned_equivariant__NotSemisimpleError() -> None:
    """Test that a nilpotent linear part is rejected."""
    fiber = su2()

    with pytest.raises(NotSemisimpleError):
        _ = normalize_twist_oned_equivariant(
            FormalVectorField.linear(rows([0, 1], [0, 0]), 2),
            JetElement.zero(fiber, 2, 2),
        )


def test__torus_reduction_check() -> None:
    """Test the reduction verdict and the integral spectrum report."""
    fiber = su2()
    rotation = FormalVectorField.linear(_ROTATION, 3)
    constant = _constant(fiber, 2, 3, [0, 0, 1])

    assert torus_reduction_check(rotation, constant) == (True, (), True)
    report = torus_reduction_check(rotation, constant)._asdict()
    assert report['spectrum_in_iz_period_2pi'] is True

    x = TruncSeries.variable(2, 3, 0)
    y = TruncSeries.variable(2, 3, 1)
    invariant = x * x + y * y
    higher = constant + JetElement.tensor(invariant, [1, 0, 0], fiber)
    assert torus_reduction_check(rotation, higher) == (False, (2,), True)

    abelian = LieAlgebra.abelian(2)
    central = JetElement.tensor(invariant, [1, 1], abelian)
    assert torus_reduction_check(rotation, central) == (False, (), True)

    hyperbolic = FormalVectorField.linear(rows([1, 0], [0, -1]), 3)
    assert not torus_reduction_check(hyperbolic, constant).spectrum_in_iz_period_2pi

    slow = FormalVectorField.linear(rows([0, '1/2'], ['-1/2', 0]), 3)
    assert not torus_reduction_check(slow, constant).spectrum_in_iz_period_2pi


# linearize_action_semisimple ###


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__linearize_action_semisimple(seed: int) -> None:
    """Test that scrambled linear fields of ``sl(2, ℝ)`` are linearized back."""
    rng = random.Random(seed)
    action = _sl2r_action()
    gauge = random_gauge(rng, action.fiber, 2, 3)
    scrambled = scramble(action, gauge, random_diffeo(rng, 2, 3))

    result = linearize_action_semisimple(scrambled)

    assert result.result.fields == action.fields
    assert horizontal_apply(result.diffeo, scrambled) == result.result
    assert mc_residual(result.result).is_zero()
    assert verify_transcript(result.transcript)


def test__linearize_action_semisimple__errors() -> None:
    """Test the preconditions."""
    action = _sl2r_action()
    perturbation = FormalVectorField(
        [TruncSeries.variable(2, 3, 0).power(2), TruncSeries.zero(2, 3)]
    )
    broken = action.with_fields([action.fields[0] + perturbation, *action.fields[1:]])
    with pytest.raises(PreconditionError):
        _ = linearize_action_semisimple(broken)

    with pytest.raises(NotSemisimpleError):
        _ = linearize_action_semisimple(
            ActionData.linear(LieAlgebra.abelian(1), su2(), [rows([1])], 2)
        )


# DGLAElement ###


def test__DGLAElement() -> None:
    """Test the accessors of alternating maps."""
    fiber = su2()
    x = TruncSeries.variable(1, 2, 0)
    values = [
        JetElement.zero(fiber, 1, 2),
        JetElement.tensor(x, [0, 1, 0], fiber),
        JetElement.zero(fiber, 1, 2),
    ]
    element = DGLAElement(sl2r(), 2, values)

    assert element.value((0, 2)) == values[1]
    assert element.lowest_degree() == 1
    assert element.homogeneous_vector(1) == [0, 0, 0, 0, 1, 0, 0, 0, 0]
    assert not element.is_zero()
    assert DGLAElement(sl2r(), 2, [JetElement.zero(fiber, 1, 2)] * 3).is_zero()

    with pytest.raises(AssertionError):
        _ = DGLAElement(sl2r(), 1, values[:2])
