"""
Floating point checks of the operator inequalities behind positive energy.

Unlike the rest of the package this module works in complex double precision: modular
operators involve logarithms and exponentials without rational form. Every check
compares against a fixed, documented tolerance, samples states with a seeded
`numpy.random.Generator` and reports the seed together with the smallest slack found,
so that a failure names its witness.

The infimum ``E_ψ(π, ξ)`` over an orbit is replaced by the smallest eigenvalue of
``−iπ(ξ)``. It is a lower bound only along inner automorphisms, so only inner orbits
are covered; every report carries this note.
"""

import itertools
import logging
from typing import (
    Callable,
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
import scipy.linalg

from . import linalg
from .cocycle import admissible_lambda_basis, cocycle_eval
from .decorators import log_calls
from .errors import NumericalRankError, PreconditionError, RepresentationError
from .jetlie import ActionData, JetElement
from .liealg import LieAlgebra, real_line, su2
from .linalg import Matrix
from .normalform import twisted_module
from .rational import Rational, to_fraction
from .ring import FormalVectorField

_logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000

SKEW_TOLERANCE = 1e-12
"""Largest deviation of a representation matrix from skew-hermitian."""

BRACKET_TOLERANCE = 1e-9
"""Largest ``‖π([x, y]) − [π(x), π(y)]‖``."""

SLACK_TOLERANCE = 1e-8
"""Most negative slack accepted for a sampled inequality."""

FLOW_TOLERANCE = 1e-8
"""Largest residual of the modular flow against the Hamiltonian flow."""

ADJOINT_TOLERANCE = 1e-9
"""Largest residual of ``J Δ^{1/2}`` against ``a ↦ a†``."""

PSD_TOLERANCE = 1e-10
"""Most negative eigenvalue accepted for a positive semidefinite generator."""

CONDITION_LIMIT = 1e-12
"""Smallest ratio of Gibbs weights for which the GNS Gram matrix is trusted."""

DEFAULT_TIMES = (0.0, 0.5, 1.0, -1.3)

INNER_ORBIT_NOTE = 'E_psi bounded by the spectrum of -i pi(xi); inner orbits only'


def _norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix))


def _commutator(one: np.ndarray, another: np.ndarray) -> np.ndarray:
    return one @ another - another @ one


def _expectation(psi: np.ndarray, operator: np.ndarray) -> float:
    return float(np.real(np.vdot(psi, operator @ psi)))


def _random_states(
    rng: np.random.Generator, dim: int, samples: int, support: Optional[int] = None
) -> List[np.ndarray]:
    support = dim if support is None else support
    states = []
    for _ in range(samples):
        psi = np.zeros(dim, dtype=complex)
        psi[:support] = rng.normal(size=support) + 1j * rng.normal(size=support)
        states.append(psi / np.linalg.norm(psi))
    return states


# Representations ###


class MatrixRep:
    """
    Unitary representation of a Lie algebra by skew-hermitian matrices.

    :param algebra: The represented algebra.
    :param matrices: ``π(e_i)`` for the basis of `algebra`.
    :param central: Index of a basis element that must be mapped to ``i·1``.

    :raises RepresentationError: A matrix is not skew-hermitian, the brackets are not
      preserved or the central element is not ``i·1``; the defect is attached.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        matrices: Sequence[np.ndarray],
        central: Optional[int] = None,
    ) -> None:
        assert len(matrices) == algebra.dim, "One matrix per basis element is needed"
        self.algebra = algebra
        self.matrices: Tuple[np.ndarray, ...] = tuple(
            np.asarray(m, dtype=complex) for m in matrices
        )
        self.central = central
        self._validate()

    @property
    def dim(self) -> int:
        """Dimension of the representation space."""
        return int(self.matrices[0].shape[0])

    def __call__(self, x: Sequence[Rational]) -> np.ndarray:
        """``π(x)`` for a coordinate vector."""
        result = np.zeros((self.dim, self.dim), dtype=complex)
        for coefficient, matrix in zip(x, self.matrices):
            result = result + float(to_fraction(coefficient)) * matrix
        return result

    def _validate(self) -> None:
        for i, matrix in enumerate(self.matrices):
            defect = _norm(matrix + matrix.conj().T)
            if defect > SKEW_TOLERANCE:
                raise RepresentationError(
                    f"π(e_{i}) is not skew-hermitian", defect=defect
                )
        for i, j in itertools.combinations(range(self.algebra.dim), 2):
            image = self(
                self.algebra.bracket(
                    self.algebra.basis_vector(i), self.algebra.basis_vector(j)
                )
            )
            defect = _norm(image - _commutator(self.matrices[i], self.matrices[j]))
            if defect > BRACKET_TOLERANCE:
                raise RepresentationError(
                    f"Bracket of e_{i} and e_{j} is not preserved", defect=defect
                )
        if self.central is not None:
            defect = _norm(self.matrices[self.central] - 1j * np.eye(self.dim))
            if defect > BRACKET_TOLERANCE:
                raise RepresentationError(
                    f"Central e_{self.central} is not mapped to i·1", defect=defect
                )


# CS-qpe ###


class CSQPEReport(NamedTuple):
    """
    Sampled check of ``⟨−iπ([ξ,η])⟩² ≤ 2⟨−iπ([[ξ,η],η])⟩(⟨−iπ(ξ)⟩ − E)``.

    :param min_slack: Smallest slack of both inequalities over the samples.
    :param witness: State attaining `min_slack`.
    :param central_min: Smallest ``⟨−iπ([[ξ,η],η])⟩`` seen.
    :param degenerate: `True` if ``[[ξ,η],η]`` vanishes (to :data:`BRACKET_TOLERANCE`).
    :param commutator_norm: ``‖π([ξ,η])‖``.
    :param kernel_holds: In the degenerate case, whether ``π([ξ,η])`` vanishes (to
      :data:`SLACK_TOLERANCE`); `None` otherwise.
    """

    samples: int
    seed: int
    min_slack: float
    witness: Optional[np.ndarray]
    central_min: float
    degenerate: bool
    commutator_norm: float
    kernel_holds: Optional[bool]
    note: str = INNER_ORBIT_NOTE

    @property
    def holds(self) -> bool:
        """`True` if the inequality and, when degenerate, the kernel statement hold."""
        return self.min_slack >= -SLACK_TOLERANCE and self.kernel_holds is not False

    def to_json(self) -> Dict[str, object]:
        """Encode for reports; the witness is left out."""
        return {
            'samples': self.samples,
            'seed': self.seed,
            'min_slack': self.min_slack,
            'central_min': self.central_min,
            'degenerate': self.degenerate,
            'commutator_norm': self.commutator_norm,
            'kernel_holds': self.kernel_holds,
            'holds': self.holds,
            'note': self.note,
        }


def _cs_qpe(
    x: np.ndarray,
    first: np.ndarray,
    second: np.ndarray,
    samples: int,
    seed: int,
    support: Optional[int],
) -> CSQPEReport:
    hermitian = -1j * x
    energy = float(np.linalg.eigvalsh((hermitian + hermitian.conj().T) / 2)[0])
    degenerate = _norm(second) <= BRACKET_TOLERANCE
    commutator_norm = _norm(first)

    rng = np.random.default_rng(seed)
    min_slack, witness, central_min = float('inf'), None, float('inf')
    for psi in _random_states(rng, x.shape[0], samples, support):
        a = _expectation(psi, -1j * second)
        b = _expectation(psi, -1j * first)
        c = _expectation(psi, hermitian) - energy
        slack = min(a, 2 * a * c - b * b)
        central_min = min(central_min, a)
        if slack < min_slack:
            min_slack, witness = slack, psi
    # endfor

    kernel_holds = commutator_norm <= SLACK_TOLERANCE if degenerate else None
    report = CSQPEReport(
        samples,
        seed,
        min_slack,
        witness,
        central_min,
        degenerate,
        commutator_norm,
        kernel_holds,
    )
    if not report.holds:
        _logger.warning(f"CS-qpe fails: slack {min_slack}, kernel {kernel_holds}")
    return report


def cs_qpe_matrices(
    x: np.ndarray,
    y: np.ndarray,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    support: Optional[int] = None,
) -> CSQPEReport:
    """
    The CS-qpe check for two matrices ``x = π(ξ)``, ``y = π(η)``, without validation.

    Brackets are matrix commutators. Skipping validation allows negative controls
    with matrices that are not skew-hermitian.

    :param support: Sample only states in the span of the first `support` basis
      vectors.
    """
    first = _commutator(x, y)
    return _cs_qpe(x, first, _commutator(first, y), samples, seed, support)


@log_calls(_logger, log_result=False)
def check_cs_qpe(
    rep: MatrixRep,
    xi: Sequence[Rational],
    eta: Sequence[Rational],
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> CSQPEReport:
    """
    The CS-qpe inequality for a unitary representation, at ``E = λ_min(−iπ(ξ))``.

    :raises PreconditionError: ``[[ξ, η], η]`` is not central.
    """
    algebra = rep.algebra
    xi = [to_fraction(x) for x in xi]
    eta = [to_fraction(x) for x in eta]
    first = algebra.bracket(xi, eta)
    second = algebra.bracket(first, eta)
    for i in range(algebra.dim):
        if any(algebra.bracket(second, algebra.basis_vector(i))):
            raise PreconditionError(f"[[ξ, η], η] = {second} is not central")

    return _cs_qpe(rep(xi), rep(first), rep(second), samples, seed, None)


class OscillatorFixture(NamedTuple):
    """
    Truncated oscillator: ``x = iN``, ``y = (a − a†)/√2``.

    ``[[x, y], y] = i[a, a†]`` equals ``i·1`` on the first ``levels − 1`` levels;
    `support` keeps sampled states below the top two levels.
    """

    x: np.ndarray
    y: np.ndarray
    levels: int
    support: int


def oscillator_fixture(levels: int) -> OscillatorFixture:
    """
    Truncated oscillator with `levels` levels.

    >>> fixture = oscillator_fixture(4)
    >>> fixture.x.shape, fixture.support
    ((4, 4), 2)
    """
    assert levels >= 3, "At least three levels are needed"
    lowering = np.diag(np.sqrt(np.arange(1, levels)), 1).astype(complex)
    number = lowering.conj().T @ lowering
    return OscillatorFixture(
        1j * number,
        (lowering - lowering.conj().T) / np.sqrt(2),
        levels,
        levels - 2,
    )


# Gibbs states ###


class GibbsData:
    """
    Gibbs state ``φ(x) = Tr(e^{−βH} x)/Z_β`` of a hermitian matrix.

    :raises PreconditionError: ``β ≤ 0``.
    :raises RepresentationError: `hamiltonian` is not hermitian.
    """

    def __init__(self, hamiltonian: np.ndarray, beta: float) -> None:
        if beta <= 0:
            raise PreconditionError(f"Inverse temperature must be positive: {beta}")
        hamiltonian = np.asarray(hamiltonian, dtype=complex)
        defect = _norm(hamiltonian - hamiltonian.conj().T)
        if defect > SKEW_TOLERANCE:
            raise RepresentationError("Hamiltonian is not hermitian", defect=defect)

        self.hamiltonian = hamiltonian
        self.beta = float(beta)
        self.energies, self.vectors = np.linalg.eigh(hamiltonian)
        shifted = np.exp(-self.beta * (self.energies - self.energies[0]))
        self.weights = shifted / shifted.sum()
        self.partition = float(np.exp(-self.beta * self.energies[0]) * shifted.sum())

    @property
    def dim(self) -> int:
        """Dimension of the Hilbert space."""
        return int(self.hamiltonian.shape[0])

    @property
    def density(self) -> np.ndarray:
        """``δ = e^{−βH}/Z_β``."""
        return (self.vectors * self.weights) @ self.vectors.conj().T

    def evolution(self, time: float) -> np.ndarray:
        """``e^{−iβtH}``."""
        return scipy.linalg.expm(-1j * self.beta * time * self.hamiltonian)


def _vec(matrix: np.ndarray) -> np.ndarray:
    return np.asarray(matrix).reshape(-1)


def _unvec(vector: np.ndarray, dim: int) -> np.ndarray:
    return vector.reshape(dim, dim)


def _swap(dim: int) -> np.ndarray:
    # vec(a†) = P conj(vec(a)) for row-major vec.
    swap = np.zeros((dim * dim, dim * dim))
    for i, j in itertools.product(range(dim), repeat=2):
        swap[i * dim + j, j * dim + i] = 1
    return swap


class GNSData(NamedTuple):
    """
    GNS space of a Gibbs state on matrices, ``⟨a, b⟩ = Tr(δ a† b)``.

    Coordinates ``u = L† vec(a)`` are orthonormal, ``L`` the Cholesky factor of the
    Gram matrix. In them the conjugation ``S a = a†`` is ``u ↦ K ū``, and the polar
    decomposition ``K = U P`` gives ``J = U∘conj`` and ``Δ^{1/2} = P̄``.
    """

    gibbs: GibbsData
    gram: np.ndarray
    factor: np.ndarray
    conjugation: np.ndarray
    unitary: np.ndarray
    modular: np.ndarray

    def coordinates(self, matrix: np.ndarray) -> np.ndarray:
        """Orthonormal coordinates of ``a·Ω``."""
        return self.factor.conj().T @ _vec(matrix)

    def matrix(self, coordinates: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`coordinates`."""
        vector = scipy.linalg.solve_triangular(
            self.factor.conj().T, coordinates, lower=False
        )
        return _unvec(vector, self.gibbs.dim)

    def modular_function(
        self, function: Callable[..., np.ndarray], *args: complex
    ) -> np.ndarray:
        """``f(Δ)`` in orthonormal coordinates, by the spectral theorem."""
        values, vectors = np.linalg.eigh(self.modular)
        return (vectors * function(values.astype(complex), *args)) @ vectors.conj().T

    def conjugate(self, coordinates: np.ndarray) -> np.ndarray:
        """``S`` applied in orthonormal coordinates."""
        return self.conjugation @ coordinates.conj()


def gns_data(gibbs: GibbsData) -> GNSData:
    """
    Build the GNS space with its conjugation and modular operator.

    :raises NumericalRankError: The Gibbs weights span more than
      :data:`CONDITION_LIMIT`, or the Gram matrix is not numerically positive.
    """
    ratio = float(gibbs.weights.min() / gibbs.weights.max())
    if ratio < CONDITION_LIMIT:
        raise NumericalRankError(
            f"Gibbs weights ratio {ratio:.3e} at β = {gibbs.beta} is below "
            f"{CONDITION_LIMIT}"
        )

    dim = gibbs.dim
    gram = np.kron(np.eye(dim), gibbs.density.T)
    try:
        factor = scipy.linalg.cholesky(gram, lower=True)
    except np.linalg.LinAlgError as error:
        raise NumericalRankError(f"GNS Gram matrix is not positive: {error}") from error

    inverse = scipy.linalg.solve_triangular(
        factor.conj().T, np.eye(dim * dim), lower=False
    )
    conjugation = factor.conj().T @ _swap(dim) @ inverse.conj()
    unitary, positive = scipy.linalg.polar(conjugation)
    modular = (positive @ positive).conj()
    modular = (modular + modular.conj().T) / 2
    return GNSData(gibbs, gram, factor, conjugation, unitary, modular)


class GibbsModularReport(NamedTuple):
    """
    Residuals of the modular objects of a Gibbs state.

    :param flow_residual: Largest ``‖Δ^{it} x − e^{−iβtH} x e^{iβtH}‖`` over the
      sampled ``x`` and times.
    :param modular_residual: ``‖Δ − (a ↦ δ a δ^{−1})‖``.
    :param involution_residual: ``‖J² − 1‖``.
    :param adjoint_residual: Largest ``‖J Δ^{1/2} a − a†‖`` over the sampled ``a``.
    :param modular_eigenvalues: Eigenvalues of ``Δ``, ascending.
    """

    beta: float
    times: Tuple[float, ...]
    seed: int
    flow_residual: float
    modular_residual: float
    involution_residual: float
    adjoint_residual: float
    modular_eigenvalues: Tuple[float, ...]

    @property
    def holds(self) -> bool:
        """`True` if the residuals are within tolerance and ``Δ > 0``."""
        return (
            max(
                self.flow_residual,
                self.modular_residual,
                self.involution_residual,
                self.adjoint_residual,
            )
            <= FLOW_TOLERANCE
            and self.adjoint_residual <= ADJOINT_TOLERANCE
            and self.modular_eigenvalues[0] > 0
        )

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            **self._asdict(),
            'times': list(self.times),
            'modular_eigenvalues': list(self.modular_eigenvalues),
            'holds': self.holds,
        }


def _random_matrices(
    rng: np.random.Generator, dim: int, count: int
) -> List[np.ndarray]:
    return [
        rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        for _ in range(count)
    ]


@log_calls(_logger, log_result=False)
def gibbs_modular_check(
    gibbs: GibbsData,
    times: Sequence[float] = DEFAULT_TIMES,
    samples: int = 8,
    seed: int = DEFAULT_SEED,
) -> GibbsModularReport:
    """
    Check that ``Δ^{it}`` implements ``x ↦ e^{−iβtH} x e^{iβtH}``.

    :raises NumericalRankError: See :func:`gns_data`.
    """
    gns = gns_data(gibbs)
    dim = gibbs.dim
    rng = np.random.default_rng(seed)
    matrices = _random_matrices(rng, dim, samples)

    density = gibbs.density
    brute = np.kron(density, np.linalg.inv(density).T)
    to_vec = np.linalg.inv(gns.factor.conj().T)
    modular_vec = to_vec @ gns.modular @ gns.factor.conj().T
    modular_residual = _norm(modular_vec - brute)

    flow_residual = 0.0
    for time in times:
        power = gns.modular_function(np.power, 1j * time)
        evolution = gibbs.evolution(time)
        for x in matrices:
            flowed = gns.matrix(power @ gns.coordinates(x))
            expected = evolution @ x @ evolution.conj().T
            flow_residual = max(flow_residual, _norm(flowed - expected))
    # endfor

    involution_residual = _norm(gns.unitary @ gns.unitary.conj() - np.eye(dim * dim))
    root = gns.modular_function(np.sqrt)
    adjoint_residual = 0.0
    for a in matrices:
        rebuilt = gns.unitary @ (root @ gns.coordinates(a)).conj()
        adjoint_residual = max(
            adjoint_residual, _norm(gns.matrix(rebuilt) - a.conj().T)
        )

    report = GibbsModularReport(
        gibbs.beta,
        tuple(float(t) for t in times),
        seed,
        flow_residual,
        modular_residual,
        involution_residual,
        adjoint_residual,
        tuple(float(x) for x in np.linalg.eigvalsh(gns.modular)),
    )
    if not report.holds:
        _logger.warning(f"Modular check fails at β = {gibbs.beta}: {report}")
    return report


# KMS entropy bound ###


def kms_entropy_slack(gns: GNSData, x: np.ndarray) -> float:
    """
    ``⟨ψ, H_φ ψ⟩/‖ψ‖² + log(‖S_φ ψ‖²/‖ψ‖²)`` for ``ψ = x·Ω``, ``H_φ = −log Δ``.
    """
    u = gns.coordinates(x)
    norm = float(np.real(np.vdot(u, u)))
    hamiltonian = gns.modular_function(lambda values: -np.log(values))
    energy = float(np.real(np.vdot(u, hamiltonian @ u))) / norm
    conjugated = gns.conjugate(u)
    return energy + float(np.log(np.real(np.vdot(conjugated, conjugated)) / norm))


class KMSReport(NamedTuple):
    """Smallest slack of the entropy bound over ``x`` of unit operator norm."""

    samples: int
    seed: int
    min_slack: float
    witness: Optional[np.ndarray]

    @property
    def holds(self) -> bool:
        """`True` if no slack is below ``−`` :data:`SLACK_TOLERANCE`."""
        return self.min_slack >= -SLACK_TOLERANCE

    def to_json(self) -> Dict[str, object]:
        """Encode for reports; the witness is left out."""
        return {
            'samples': self.samples,
            'seed': self.seed,
            'min_slack': self.min_slack,
            'holds': self.holds,
        }


@log_calls(_logger, log_result=False)
def kms_entropy_bound(
    gibbs: GibbsData, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> KMSReport:
    """
    Check ``⟨ψ, H_φψ⟩/‖ψ‖² ≥ −log(‖S_φψ‖²/‖ψ‖²)`` on random ``ψ = x·Ω``.

    :raises NumericalRankError: See :func:`gns_data`.
    """
    gns = gns_data(gibbs)
    rng = np.random.default_rng(seed)
    min_slack, witness = float('inf'), None
    for x in _random_matrices(rng, gibbs.dim, samples):
        x = x / np.linalg.norm(x, 2)
        slack = kms_entropy_slack(gns, x)
        if slack < min_slack:
            min_slack, witness = slack, x
    # endfor
    return KMSReport(samples, seed, min_slack, witness)


# Metaplectic positivity ###


_ROTATION = [[to_fraction(0), to_fraction(1)], [to_fraction(-1), to_fraction(0)]]


class MetaplecticReport(NamedTuple):
    """
    Positivity of the rotation on ``W = V* ⊗ su2`` and on its truncated Fock space.

    :param form_min: Smallest ``ω(Jξ, ξ)/|ξ|²`` over basis and sampled ``ξ``.
    :param eigenvalues: Spectrum of the second quantized generator, ascending.
    """

    degree: int
    seed: int
    form_min: float
    eigenvalues: Tuple[float, ...]

    @property
    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue of the generator."""
        return self.eigenvalues[0]

    @property
    def holds(self) -> bool:
        """`True` if both the form and the generator are positive semidefinite."""
        return self.form_min >= -PSD_TOLERANCE and self.min_eigenvalue >= -PSD_TOLERANCE

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            'degree': self.degree,
            'seed': self.seed,
            'form_min': self.form_min,
            'eigenvalues': list(self.eigenvalues),
            'holds': self.holds,
        }


def _symplectic_data() -> Tuple[Matrix, Matrix]:
    # Exact ω on W = P¹(ℝ²) ⊗ su2 and J = D(p₀), coordinates mono·3 + a.
    fiber = su2()
    field = FormalVectorField.linear(_ROTATION, 1)
    basis = admissible_lambda_basis([field], 1)
    assert len(basis) == 1, "The rotation admits one functional up to scale"
    lam = basis[0]

    action = ActionData.linear(real_line(), fiber, [_ROTATION], 1)
    rotation = twisted_module(action, 1).action([1])
    size = len(rotation)
    elements = [
        JetElement.from_homogeneous_vector(
            fiber, 2, 1, 1, [to_fraction(int(i == j)) for j in range(size)]
        )
        for i in range(size)
    ]
    omega = [[cocycle_eval(lam, a, b) for b in elements] for a in elements]
    return omega, rotation


def _complex_basis(rotation: np.ndarray) -> np.ndarray:
    # Real vectors b_k with {b_k, J b_k} a basis of W.
    size = rotation.shape[0]
    chosen: List[np.ndarray] = []
    span = np.zeros((0, size))
    for candidate in np.eye(size):
        trial = np.vstack([span, candidate, rotation @ candidate])
        if np.linalg.matrix_rank(trial) == trial.shape[0]:
            chosen.append(candidate)
            span = trial
    assert 2 * len(chosen) == size, "J must be a complex structure"
    return np.array(chosen)


def _fock_basis(modes: int, degree: int) -> List[Tuple[int, ...]]:
    return [
        each
        for n in range(degree + 1)
        for each in itertools.combinations_with_replacement(range(modes), n)
    ]


def _fock_gram(inner: np.ndarray, basis: Sequence[Tuple[int, ...]]) -> np.ndarray:
    # ⟨v₁⋯vₙ, w₁⋯wₙ⟩ = Σ_σ Π ⟨v_j, w_σ(j)⟩, zero between different n.
    gram = np.zeros((len(basis), len(basis)), dtype=complex)
    for i, s in enumerate(basis):
        for j, t in enumerate(basis):
            if len(s) != len(t):
                continue
            gram[i, j] = sum(
                np.prod([inner[s[k], t[p[k]]] for k in range(len(s))])
                for p in itertools.permutations(range(len(s)))
            )
    return gram


def _second_quantize(
    generator: np.ndarray, basis: Sequence[Tuple[int, ...]]
) -> np.ndarray:
    index = {each: i for i, each in enumerate(basis)}
    result = np.zeros((len(basis), len(basis)), dtype=complex)
    for column, monomial in enumerate(basis):
        for k, mode in enumerate(monomial):
            for target in range(generator.shape[0]):
                coefficient = generator[target, mode]
                if coefficient == 0:
                    continue
                image = tuple(sorted(monomial[:k] + (target,) + monomial[k + 1 :]))
                result[index[image], column] += coefficient
    return result


@log_calls(_logger, log_result=False)
def metaplectic_positivity(
    degree: int, samples: int = 100, seed: int = DEFAULT_SEED
) -> MetaplecticReport:
    """
    Positivity for the rotation of ℝ² with ``k = su2``, up to `degree` particles.

    ``ω`` comes exactly from :mod:`cocycle` with the positively oriented functional,
    ``J = D(p₀)`` from :func:`normalform.twisted_module`. The one-particle space is
    ``(W, J)`` with ``h = ω(J·, ·) − iω``; the generator ``−iJ`` is second quantized
    on the truncated symmetric Fock space without normal ordering shift.

    :raises RepresentationError: The Fock Gram matrix is not positive definite.
    """
    assert degree >= 0, f"Degree must be non-negative: {degree}"
    omega_exact, rotation_exact = _symplectic_data()
    metric_exact = linalg.matmul(linalg.transpose(rotation_exact), omega_exact)
    omega = np.array(omega_exact, dtype=float)
    rotation = np.array(rotation_exact, dtype=float)
    metric = np.array(metric_exact, dtype=float)

    rng = np.random.default_rng(seed)
    vectors = list(np.eye(len(metric))) + [
        rng.normal(size=len(metric)) for _ in range(samples)
    ]
    form_min = min(float(v @ metric @ v / (v @ v)) for v in vectors)

    basis = _complex_basis(rotation)
    modes = len(basis)
    inner = basis @ metric @ basis.T - 1j * (basis @ omega @ basis.T)
    real_basis = np.vstack([basis, basis @ rotation.T])
    complex_rotation = np.zeros((modes, modes), dtype=complex)
    for k, b in enumerate(basis):
        coordinates = np.linalg.solve(real_basis.T, rotation @ b)
        complex_rotation[:, k] = coordinates[:modes] + 1j * coordinates[modes:]

    fock = _fock_basis(modes, degree)
    gram = _fock_gram(inner, fock)
    gram_min = float(np.linalg.eigvalsh(gram)[0])
    if gram_min <= 0:
        raise RepresentationError(
            "Fock Gram matrix is not positive definite", defect=gram_min
        )

    generator = gram @ _second_quantize(-1j * complex_rotation, fock)
    defect = _norm(generator - generator.conj().T)
    if defect > BRACKET_TOLERANCE:
        raise RepresentationError("Fock generator is not self-adjoint", defect=defect)
    eigenvalues = scipy.linalg.eigh(
        (generator + generator.conj().T) / 2, gram, eigvals_only=True
    )
    report = MetaplecticReport(
        degree, seed, form_min, tuple(float(x) for x in eigenvalues)
    )
    _logger.info(f"Fock degree {degree}: smallest eigenvalue {report.min_eigenvalue}")
    return report
