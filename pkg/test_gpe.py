"""Tests for `gpe` module."""

import json
import math
from typing import List

import numpy as np
import pytest

from .errors import NumericalRankError, PreconditionError, RepresentationError
from .gpe import (
    SLACK_TOLERANCE,
    GibbsData,
    MatrixRep,
    check_cs_qpe,
    cs_qpe_matrices,
    gibbs_modular_check,
    gns_data,
    kms_entropy_bound,
    kms_entropy_slack,
    metaplectic_positivity,
    oscillator_fixture,
)
from .liealg import real_line, real_plane, su2
from .testutils import DEFAULT_SEEDS

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _su2_rep(sign: int = -1) -> MatrixRep:
    return MatrixRep(su2(), [sign * 0.5j * each for each in _PAULI])


def _multiplicities(eigenvalues: List[float]) -> List[int]:
    rounded = [round(x) for x in eigenvalues]
    assert np.allclose(eigenvalues, rounded, atol=1e-8)
    return [rounded.count(n) for n in range(max(rounded) + 1)]


# MatrixRep ###


def test__MatrixRep__spin_half() -> None:
    rep = _su2_rep()
    assert rep.dim == 2
    assert np.allclose(rep([1, 0, 1]), -0.5j * (_PAULI[0] + _PAULI[2]))


def test__MatrixRep__not_skew() -> None:
    with pytest.raises(RepresentationError) as info:
        MatrixRep(su2(), list(_PAULI))

    assert info.value.defect > 0


def test__MatrixRep__bracket_not_preserved() -> None:
    with pytest.raises(RepresentationError, match='Bracket'):
        _su2_rep(sign=1)


@pytest.mark.parametrize(
    'scale, valid',
    (
        (1, True),
        (2, False),
    ),
)
def test__MatrixRep__central(scale: int, valid: bool) -> None:
    matrices = [scale * 1j * np.eye(3)]
    if valid:
        MatrixRep(real_line(), matrices, central=0)
    else:
        with pytest.raises(RepresentationError, match='Central'):
            MatrixRep(real_line(), matrices, central=0)


# CS-qpe ###


def test__check_cs_qpe__equal_directions() -> None:
    report = check_cs_qpe(_su2_rep(), [1, 0, 0], [1, 0, 0], samples=50)

    assert report.degenerate
    assert report.kernel_holds
    assert report.holds
    assert report.min_slack == pytest.approx(0, abs=1e-12)


def test__check_cs_qpe__commuting() -> None:
    rep = MatrixRep(
        real_plane(), [1j * np.diag([1.0, -2.0]), 1j * np.diag([3.0, 0.5])]
    )
    report = check_cs_qpe(rep, [1, 0], [0, 1], samples=50, seed=7)

    assert report.degenerate
    assert report.kernel_holds
    assert report.holds
    assert report.seed == 7
    assert 'inner orbits' in report.note


def test__check_cs_qpe__not_central() -> None:
    with pytest.raises(PreconditionError):
        check_cs_qpe(_su2_rep(), [1, 0, 0], [0, 1, 0])


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__cs_qpe_matrices__oscillator(seed: int) -> None:
    fixture = oscillator_fixture(8)
    report = cs_qpe_matrices(
        fixture.x, fixture.y, samples=1000, seed=seed, support=fixture.support
    )

    assert not report.degenerate
    assert report.holds
    assert report.central_min == pytest.approx(1)
    assert report.min_slack >= -SLACK_TOLERANCE


def test__cs_qpe_matrices__coherent_state_attains_bound() -> None:
    fixture = oscillator_fixture(40)
    alpha = 0.7
    psi = np.array(
        [alpha**n / math.sqrt(math.factorial(n)) for n in range(40)], dtype=complex
    )
    psi = psi / np.linalg.norm(psi)
    # ⟨Q⟩² = 2⟨N⟩ for a real coherent amplitude.
    commutator = fixture.x @ fixture.y - fixture.y @ fixture.x
    position = np.real(np.vdot(psi, 1j * commutator @ psi))
    number = np.real(np.vdot(psi, -1j * fixture.x @ psi))
    assert position**2 == pytest.approx(2 * number, rel=1e-6)


def test__cs_qpe_matrices__non_unitary_control() -> None:
    x = np.diag([1.0, 0.0]).astype(complex)
    y = np.array([[0, 1], [0, 0]], dtype=complex)
    report = cs_qpe_matrices(x, y, samples=20)

    assert report.degenerate
    assert report.kernel_holds is False
    assert not report.holds


def test__CSQPEReport__to_json() -> None:
    fixture = oscillator_fixture(5)
    report = cs_qpe_matrices(fixture.x, fixture.y, samples=10, support=fixture.support)
    encoded = json.loads(json.dumps(report.to_json()))

    assert encoded['samples'] == 10
    assert encoded['seed'] == 0
    assert 'witness' not in encoded


# Gibbs states ###


def test__GibbsData__invalid() -> None:
    with pytest.raises(PreconditionError):
        GibbsData(np.eye(2), 0)
    with pytest.raises(RepresentationError):
        GibbsData(np.array([[0, 1], [0, 0]]), 1)


def test__GibbsData__density() -> None:
    gibbs = GibbsData(np.diag([1.0, -1.0]), 1)
    density = gibbs.density

    assert np.trace(density).real == pytest.approx(1, abs=1e-12)
    assert np.allclose(density, np.diag([math.exp(-1), math.exp(1)]) / gibbs.partition)
    assert gibbs.partition == pytest.approx(2 * math.cosh(1))


def test__gibbs_modular_check__zero_hamiltonian() -> None:
    report = gibbs_modular_check(GibbsData(np.zeros((3, 3)), 2.0))

    assert report.holds
    assert np.allclose(report.modular_eigenvalues, 1)


def test__gibbs_modular_check__two_levels() -> None:
    report = gibbs_modular_check(GibbsData(np.diag([1.0, -1.0]), 1.0))

    assert report.holds
    assert np.allclose(
        report.modular_eigenvalues, [math.exp(-2), 1, 1, math.exp(2)]
    )
    assert json.dumps(report.to_json())


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__gibbs_modular_check__random_hamiltonian(seed: int) -> None:
    rng = np.random.default_rng(seed)
    matrix = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    gibbs = GibbsData((matrix + matrix.conj().T) / 2, 0.7)
    report = gibbs_modular_check(gibbs, seed=seed)

    assert report.holds
    assert report.seed == seed


def test__gibbs_modular_check__identity_at_time_zero() -> None:
    report = gibbs_modular_check(GibbsData(np.diag([0.3, 2.0]), 5.0), times=(0.0,))

    assert report.flow_residual < 1e-10


def test__gns_data__extreme_beta() -> None:
    with pytest.raises(NumericalRankError):
        gns_data(GibbsData(np.diag([0.0, 100.0]), 1.0))


# KMS entropy bound ###


def test__kms_entropy_slack__identity() -> None:
    gns = gns_data(GibbsData(np.diag([1.0, -1.0]), 1.0))

    assert kms_entropy_slack(gns, np.eye(2)) == pytest.approx(0, abs=1e-10)


def test__kms_entropy_slack__unitary() -> None:
    gns = gns_data(GibbsData(np.diag([1.0, -1.0]), 1.0))
    unitary = np.array([[0, 1], [1, 0]], dtype=complex)

    assert kms_entropy_slack(gns, unitary) >= -SLACK_TOLERANCE


def test__kms_entropy_slack__rank_one_strict() -> None:
    gns = gns_data(GibbsData(np.diag([1.0, -1.0]), 1.0))
    rank_one = np.array([[1, 1], [0, 0]], dtype=complex) / math.sqrt(2)

    assert kms_entropy_slack(gns, rank_one) > 0.3


@pytest.mark.parametrize('seed', DEFAULT_SEEDS)
def test__kms_entropy_bound__random(seed: int) -> None:
    report = kms_entropy_bound(GibbsData(np.diag([0.0, 0.5, 2.0]), 1.3), 200, seed)

    assert report.holds
    assert report.to_json()['seed'] == seed


# Metaplectic positivity ###


def test__metaplectic_positivity__vacuum() -> None:
    report = metaplectic_positivity(0)

    assert report.eigenvalues == pytest.approx((0.0,), abs=1e-10)
    assert report.holds


@pytest.mark.parametrize(
    'degree, multiplicities',
    (
        (1, [1, 3]),
        (3, [1, 3, 6, 10]),
    ),
)
def test__metaplectic_positivity__spectrum(
    degree: int, multiplicities: List[int]
) -> None:
    report = metaplectic_positivity(degree, samples=20)

    assert report.holds
    assert report.form_min > 0
    assert _multiplicities(list(report.eigenvalues)) == multiplicities
    assert json.dumps(report.to_json())
