"""Tests for `factorize` module."""

from fractions import Fraction
import json
from typing import List, Sequence

import pytest

from . import linalg
from .cocycle import e_subspace
from .errors import InexactSpectrumError, MismatchError, PreconditionError
from .factorize import (
    CENTER_JETS,
    FIBER,
    NO_CONCLUSION,
    SEMISIMPLE_CONE,
    TWO_JETS,
    ConeSpec,
    HypothesisStatus,
    center_subspace,
    center_subspace_family,
    check_pe_factorization,
    check_spectral_condition,
    cone_certificate,
    cone_pointed,
    irreducibility_refutation,
    kernel_ideal_from_center,
    semigroup_sigma,
    semisimple_pipeline,
    spectral_factorization,
)
from .jetlie import ActionData
from .liealg import Verdict, real_line, real_plane, sl2r, spectrum, su2
from .linalg import Matrix
from .rational import GaussianRational
from .ring import monomials
from .testutils import rows

_SL2R_MATRICES = (rows([1, 0], [0, -1]), rows([0, 1], [0, 0]), rows([0, 0], [1, 0]))

_ROTATION = rows([0, 1], [-1, 0])

_SPIRAL = rows([0, 1, 0], [-1, 0, 0], [0, 0, 1])


def _line_action(
    linear: Matrix, order: int = 2, sigma0: Sequence[int] = (0, 0, 0)
) -> ActionData:
    # ℝ acting by one linear field, twisted into su2.
    return ActionData.linear(real_line(), su2(), [linear], order, sigma0=[sigma0])


def _sl2r_action(matrices: Sequence[Matrix] = _SL2R_MATRICES) -> ActionData:
    return ActionData.linear(sl2r(), su2(), matrices, 2)


def _values(matrix: Matrix, bound: int) -> List[GaussianRational]:
    sums = semigroup_sigma(spectrum(matrix), bound)
    assert all(each.is_exact for each in sums)
    return sorted(each.value for each in sums if each.value is not None)


# Spectra ###


@pytest.mark.parametrize(
    'matrix, bound, expected',
    (
        (rows([1]), 3, [1, 2, 3]),
        (rows([1, 0], [0, 2]), 2, [1, 2, 3, 4]),
        (rows([1, 0], [0, 1]), 2, [1, 2]),
    ),
)
def test__semigroup_sigma(matrix: Matrix, bound: int, expected: List[int]) -> None:
    """Test sums of real eigenvalues, repeated eigenvalues counted once."""
    assert _values(matrix, bound) == [GaussianRational.of(x) for x in expected]


def test__semigroup_sigma__imaginary() -> None:
    """Test that ``±i`` gives ``{±i, ±2i, 0}`` with two summands."""
    expected = [GaussianRational.of(0, x) for x in (-2, -1, 1, 2)]
    expected.append(GaussianRational.of(0))

    assert _values(_ROTATION, 2) == sorted(expected)


def test__semigroup_sigma__bound() -> None:
    """Test the assertion on the bound."""
    with pytest.raises(AssertionError):
        _ = semigroup_sigma(spectrum(_ROTATION), 0)


def test__check_pe_factorization__disjoint() -> None:
    """Test disjoint spectra: the operator on ``P²(V) ⊗ k`` is invertible."""
    verdict = check_pe_factorization(_line_action(rows([1, 0], [0, 2])), [1])

    assert verdict.conclusion == TWO_JETS
    assert verdict.conclusive
    assert verdict.ideal_space == 'P^2(V)⊗k'
    assert len(verdict.ideal) == 9
    assert verdict.certificates['rank'] == verdict.certificates['dimension'] == 9


def test__check_pe_factorization__intersects() -> None:
    """Test ``Spec(ad_{e3}) = {0, ±i}`` against a rotation with spectrum ``±i``."""
    verdict = check_pe_factorization(_line_action(_ROTATION, sigma0=(0, 0, 1)), [1])

    assert verdict.conclusion == NO_CONCLUSION
    assert verdict.ideal == ()
    assert verdict.hypothesis('spectra_disjoint').status is HypothesisStatus.FAILS


def test__check_pe_factorization__nilpotent() -> None:
    """Test a nilpotent linear part with ``σ0 = 0``: both spectra are ``{0}``."""
    verdict = check_pe_factorization(_line_action(rows([0, 1], [0, 0])), [1])

    assert verdict.conclusion == NO_CONCLUSION


@pytest.mark.parametrize(
    'linear, bound, expected',
    (
        (rows([1, 0], [0, 2]), 3, Verdict.DISJOINT),
        (rows([1, 0], [0, -1]), 2, Verdict.INTERSECTS),
        (rows([1, 0], [0, -1]), 1, Verdict.DISJOINT),
        (rows([0, 2], [1, 0]), 2, Verdict.UNDECIDED),
        (rows([0, 2], [1, 0]), 1, Verdict.DISJOINT),
    ),
)
def test__check_spectral_condition(
    linear: Matrix, bound: int, expected: Verdict
) -> None:
    """Test the three outcomes; ``±√2`` are only known numerically."""
    assert check_spectral_condition(_line_action(linear), [1], bound) is expected


def test__check_spectral_condition__exact() -> None:
    """Test that exact mode decides rational spectra and rejects irrational ones."""
    action = _line_action(rows([1, 0], [0, 2]))
    assert check_spectral_condition(action, [1], 3, mode='exact') is Verdict.DISJOINT

    with pytest.raises(InexactSpectrumError):
        _ = check_spectral_condition(
            _line_action(rows([0, 2], [1, 0])), [1], 2, mode='exact'
        )


# Center subspaces ###


@pytest.mark.parametrize(
    'linear, expected',
    (
        (rows([1, 0], [0, -1]), []),
        (_ROTATION, rows([1, 0], [0, 1])),
        (rows([0, 0], [0, 1]), rows([1, 0])),
        (rows([1, 1], [0, 0]), rows([1, -1])),
        (_SPIRAL, rows([1, 0, 0], [0, 1, 0])),
    ),
)
def test__center_subspace(linear: Matrix, expected: Matrix) -> None:
    """Test ``V_c`` and that it complements the off-axis subspace of ``L_{v_l}``."""
    center = center_subspace(linear)
    dim = len(linear)

    assert linalg.same_span(center, expected)
    assert linalg.same_span(
        linalg.annihilator(center, dim), e_subspace(linear, 1).linear_part()
    )


def test__center_subspace_family() -> None:
    """Test intersections over points of an abelian ``p``."""
    action = ActionData.linear(
        real_plane(), su2(), [rows([0, 0], [0, 1]), rows([1, 0], [0, 0])], 1
    )

    single = center_subspace_family([[1, 0]], action)
    assert linalg.same_span(single.center, center_subspace(rows([0, 0], [0, 1])))
    assert linalg.same_span(single.annihilator, rows([0, 1]))

    both = center_subspace_family([[1, 0], [0, 1]], action)
    assert both.center == []
    assert linalg.same_span(both.annihilator, linalg.identity(2))

    twice = center_subspace_family([[1, 0], [1, 0]], action)
    assert linalg.same_span(twice.center, single.center)


@pytest.mark.parametrize(
    'vc_perp, quotient, size',
    (
        ([], CENTER_JETS, 0),
        (rows([1, 0], [0, 1]), FIBER, 5),
        (rows([0, 1]), CENTER_JETS, 3),
    ),
)
def test__kernel_ideal_from_center(vc_perp: Matrix, quotient: str, size: int) -> None:
    """Test the ideal ``R·V_c^⊥`` at order 2 in two variables with ``k = su2``."""
    ideal = kernel_ideal_from_center(vc_perp, 2, 2, fiber_dim=3)

    assert ideal.quotient == quotient
    assert len(ideal.generators) == size
    assert ideal.quotient_dimension == (len(monomials(2, 2)) - size) * 3


def test__kernel_ideal_from_center__generators() -> None:
    """Test that ``V_c = span(e1)`` gives the ideal ``(y)``."""
    ideal = kernel_ideal_from_center(rows([0, 1]), 2, 2)

    assert [g.to_vector() for g in ideal.generators] == [
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ]


def test__spectral_factorization__fiber() -> None:
    """Test a hyperbolic field: ``V_c = {0}`` and the quotient is ``k``."""
    verdict = spectral_factorization(_line_action(rows([1, 0], [0, 2])), [[1]])

    assert verdict.conclusion == FIBER
    assert verdict.ideal_space == 'R_N'
    assert len(verdict.ideal) == len(monomials(2, 2)) - 1


def test__spectral_factorization__center() -> None:
    """Test a spiral with one summand: the ideal is generated by ``z``."""
    action = ActionData.linear(real_line(), su2(), [_SPIRAL], 1)

    verdict = spectral_factorization(action, [[1]], bound=1)

    assert verdict.conclusion == CENTER_JETS
    assert verdict.ideal == ((0, 0, 0, 1),)


def test__spectral_factorization__undecided() -> None:
    """Test that a numerically undecidable comparison gives no conclusion."""
    verdict = spectral_factorization(_line_action(rows([0, 2], [1, 0])), [[1]], 2)

    assert verdict.conclusion == NO_CONCLUSION
    assert verdict.undecided


def test__spectral_factorization__intersects() -> None:
    """Test that ``0 ∈ Σ_p`` gives no conclusion, without being undecided."""
    verdict = spectral_factorization(_line_action(rows([0, 0], [0, 1])), [[1]])

    assert verdict.conclusion == NO_CONCLUSION
    assert not verdict.undecided


# Cones ###


@pytest.mark.parametrize(
    'generators, pointed',
    (
        ([[1, 0], [0, 1]], True),
        ([[1, 0], [-1, 0]], False),
        ([[1, 0], [0, 1], [-1, -1]], False),
        ([[1, 0], [1, 1], [0, 1]], True),
        ([[1, 0], [0, 1], [-1, 0]], False),
        ([[2, 1]], True),
        ([[1, 1, 0], [-1, 0, 0], [0, -1, 0]], False),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], True),
        ([[1, 0, 0], [0, 1, 0], [-1, -1, 1]], True),
        ([[1, 2, 3], [-2, -4, -6]], False),
        ([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], True),
        ([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-1, -1, -1, 0]], False),
        ([[1, 0, 0, 0], [1, 1, 0, 0], [1, -1, 0, 0], [1, 0, 1, 1]], True),
        ([[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [-1, 0, 0, 1]], False),
    ),
)
def test__cone_certificate(generators: List[List[int]], pointed: bool) -> None:
    """Test pointedness against hand-made cones, with the certificate checked."""
    cone = ConeSpec.of(generators)
    certificate = cone_certificate(cone)

    assert certificate.pointed is pointed
    assert cone_pointed(cone) is pointed
    if pointed:
        assert certificate.multipliers is None
        assert certificate.separator is not None
        for g in cone.generators:
            assert sum(x * y for x, y in zip(certificate.separator, g)) >= 1
    else:
        assert certificate.separator is None
        assert certificate.multipliers is not None
        assert sum(certificate.multipliers) == 1
        assert all(x >= 0 for x in certificate.multipliers)
        assert not any(
            linalg.matvec(linalg.transpose(cone.generators), certificate.multipliers)
        )


def test__cone_certificate__triangle() -> None:
    """Test that the only combination of ``e1, e2, −e1−e2`` is the balanced one."""
    certificate = cone_certificate(ConeSpec.of([[1, 0], [0, 1], [-1, -1]]))

    assert certificate.multipliers == (Fraction(1, 3),) * 3


def test__ConeSpec__of() -> None:
    """Test validation of generators."""
    assert ConeSpec.of([['1/2', 0]]).generators == ((Fraction(1, 2), Fraction(0)),)

    with pytest.raises(PreconditionError):
        _ = ConeSpec.of([[1, 0], [0, 0]])

    with pytest.raises(MismatchError):
        _ = ConeSpec.of([[1, 0], [1]])

    with pytest.raises(MismatchError):
        _ = ConeSpec.of([])


# Semisimple p ###


@pytest.mark.parametrize(
    'matrices, invariant',
    (
        (_SL2R_MATRICES, None),
        ((_ROTATION,), None),
        ((rows([1, 1], [0, 2]),), rows([1, 0])),
        ((rows([1, 0], [0, 0]), rows([0, 0], [0, 1])), rows([1, 0])),
        ((rows([0, 0], [0, 0]),), rows([1, 0])),
    ),
)
def test__irreducibility_refutation(
    matrices: Sequence[Matrix], invariant: Matrix
) -> None:
    """Test invariant subspaces found, and none for irreducible actions."""
    found = irreducibility_refutation(matrices)

    if invariant is None:
        assert found is None
    else:
        assert found is not None
        assert linalg.same_span(found, invariant)


def _full_cone() -> ConeSpec:
    identity = linalg.identity(3)
    return ConeSpec.of(identity + [[-x for x in row] for row in identity])


def test__semisimple_pipeline__full_cone() -> None:
    """Test ``sl(2, ℝ)`` on ℝ² with the cone ``p``: factors through ``k``."""
    verdict = semisimple_pipeline(_sl2r_action(), _full_cone())

    assert verdict.theorem == SEMISIMPLE_CONE
    assert verdict.conclusion == FIBER
    assert len(verdict.ideal) == len(monomials(2, 2)) - 1
    assert verdict.certificates['quotient_dimension'] == 3
    held = ('maurer_cartan', 'semisimple', 'noncompact_simple', 'hyperbolic_generator')
    for name in held:
        assert verdict.hypothesis(name).status is HypothesisStatus.HOLDS
    assert verdict.hypothesis('cone_not_pointed').status is HypothesisStatus.HOLDS
    status = verdict.hypothesis('irreducible_nontrivial').status
    assert status is HypothesisStatus.UNDECIDED
    _ = json.dumps(verdict.to_json())


def test__semisimple_pipeline__asserted_irreducible() -> None:
    """Test that an asserted irreducibility is recorded as such."""
    verdict = semisimple_pipeline(_sl2r_action(), _full_cone(), irreducible=True)

    assert verdict.conclusion == FIBER
    status = verdict.hypothesis('irreducible_nontrivial').status
    assert status is HypothesisStatus.ASSERTED


def test__semisimple_pipeline__rotation_cone() -> None:
    """Test the pointed cone of the rotation generator ``E − F``: no conclusion."""
    verdict = semisimple_pipeline(_sl2r_action(), ConeSpec.of([[0, 1, -1]]))

    assert verdict.conclusion == NO_CONCLUSION
    assert not verdict.conclusive
    assert verdict.hypothesis('cone_not_pointed').status is HypothesisStatus.FAILS
    assert verdict.hypothesis('hyperbolic_generator').status is HypothesisStatus.FAILS


def test__semisimple_pipeline__trivial_action() -> None:
    """Test that a trivial ``v_l`` fails the irreducibility hypothesis."""
    zero = rows([0, 0], [0, 0])
    verdict = semisimple_pipeline(_sl2r_action([zero] * 3), _full_cone())

    assert verdict.conclusion == NO_CONCLUSION
    status = verdict.hypothesis('irreducible_nontrivial').status
    assert status is HypothesisStatus.FAILS


def test__semisimple_pipeline__compact() -> None:
    """Test that ``su2`` fails the non-compactness hypothesis unless asserted."""
    action = ActionData.linear(
        su2(),
        su2(),
        [
            rows([0, 0, 0], [0, 0, -1], [0, 1, 0]),
            rows([0, 0, 1], [0, 0, 0], [-1, 0, 0]),
            rows([0, -1, 0], [1, 0, 0], [0, 0, 0]),
        ],
        1,
    )
    cone = ConeSpec.of([[1, 0, 0]])

    verdict = semisimple_pipeline(action, cone)
    assert verdict.conclusion == NO_CONCLUSION
    assert verdict.hypothesis('noncompact_simple').status is HypothesisStatus.FAILS

    asserted = semisimple_pipeline(action, cone, simple_noncompact=True)
    assert asserted.hypothesis('noncompact_simple').status is HypothesisStatus.ASSERTED
    # Rotations have V_c = V.
    assert asserted.conclusion == NO_CONCLUSION


def test__semisimple_pipeline__abelian() -> None:
    """Test that an abelian ``p`` fails the semisimplicity hypothesis."""
    action = _line_action(rows([1, 0], [0, 2]))
    verdict = semisimple_pipeline(action, ConeSpec.of([[1]]))

    assert verdict.conclusion == NO_CONCLUSION
    assert verdict.hypothesis('semisimple').status is HypothesisStatus.FAILS


def test__semisimple_pipeline__MismatchError() -> None:
    """Test a cone outside ``p``."""
    with pytest.raises(MismatchError):
        _ = semisimple_pipeline(_sl2r_action(), ConeSpec.of([[1, 0]]))
