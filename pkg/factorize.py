"""
Verdicts on how a positive energy representation of ``g_N ⋊ p`` factorizes.

The factorization results license conclusions of the form "the restriction to ``g``
factors through a quotient" once their hypotheses hold. The functions here check the
hypotheses that can be checked (spectra, cone geometry, normal forms), itemize them in
a :class:`FactorizationVerdict` and report the licensed quotient:

* :data:`TWO_JETS` when ``Spec(ad_{σ0(p)})`` and ``Spec(v_l(p))`` are disjoint,
* :data:`CENTER_JETS` (``ℝ⟦V_c*⟧ ⊗ k``) from the center subspace of a cone,
* :data:`FIBER` (``k``) when that center subspace is ``{0}``.

Hypotheses that are only numerically decidable stay undecided; no verdict turns an
undecided comparison into a definite one. Whether a cone is the positive cone of an
actual representation cannot be decided here; the supplied points are taken as given.
"""

from enum import Enum
from fractions import Fraction
import itertools
import logging
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sympy import Matrix as SympyMatrix
from sympy.solvers.simplex import InfeasibleLPError, linprog

from . import linalg
from .cocycle import ideal_span
from .decorators import log_calls
from .errors import (
    MismatchError,
    NotSemisimpleError,
    PreconditionError,
)
from .jetlie import ActionData
from .liealg import (
    DEFAULT_TOLERANCE,
    NONCOMPACT_SIMPLE,
    Eigenvalue,
    Spectrum,
    Verdict,
    axis_decomposition,
    spectra_disjoint,
    spectrum,
)
from .linalg import Matrix, Vector
from .normalform import mc_residual, normalize_twist_semisimple, twisted_module
from .rational import Rational, format_fraction, to_fraction
from .ring import TruncSeries, monomials

_logger = logging.getLogger(__name__)

TWO_JETS = '2-jets'
CENTER_JETS = 'ℝ⟦V_c*⟧⊗k'
FIBER = 'k'
NO_CONCLUSION = 'no conclusion'

PE_TWO_JETS = 'pe_two_jets'
"""Theorem tag: disjoint spectra give a factorization through 2-jets."""

SPECTRAL_CONDITION = 'spectral_condition'
"""Theorem tag: ``Spec(ad_{σ0(p)}) ∩ Σ_p = ∅`` on a cone gives ``ℝ⟦V_c*⟧ ⊗ k``."""

SEMISIMPLE_CONE = 'semisimple_cone'
"""Theorem tag: non-compact simple ``p``, either a pointed cone or ``k``."""


class HypothesisStatus(Enum):
    """Status of one hypothesis of a factorization result."""

    HOLDS = 'holds'
    FAILS = 'fails'
    UNDECIDED = 'undecided'
    ASSERTED = 'asserted'


class Hypothesis(NamedTuple):
    """A checked (or asserted) hypothesis with a human readable detail."""

    name: str
    status: HypothesisStatus
    detail: str = ''

    @property
    def usable(self) -> bool:
        """`True` if a conclusion may rely on it."""
        return self.status in (HypothesisStatus.HOLDS, HypothesisStatus.ASSERTED)

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {'name': self.name, 'status': self.status.value, 'detail': self.detail}


def _from_verdict(verdict: Verdict) -> HypothesisStatus:
    return {
        Verdict.DISJOINT: HypothesisStatus.HOLDS,
        Verdict.INTERSECTS: HypothesisStatus.FAILS,
        Verdict.UNDECIDED: HypothesisStatus.UNDECIDED,
    }[verdict]


def _matrix_json(rows: Iterable[Sequence[Fraction]]) -> List[List[str]]:
    return [[format_fraction(x) for x in row] for row in rows]


class FactorizationVerdict(NamedTuple):
    """
    Outcome of one factorization result.

    :param theorem: One of :data:`PE_TWO_JETS`, :data:`SPECTRAL_CONDITION` and
      :data:`SEMISIMPLE_CONE`.
    :param hypotheses: Every hypothesis with its status.
    :param conclusion: :data:`TWO_JETS`, :data:`CENTER_JETS`, :data:`FIBER` or
      :data:`NO_CONCLUSION`.
    :param ideal: Basis of the part of the kernel found, as coordinate vectors in
      `ideal_space`. Empty without conclusion.
    :param ideal_space: ``'P^2(V)⊗k'`` or ``'R_N'`` (an ideal of ``R_N``, to be
      tensored with ``k``).
    :param certificates: Data backing the verdict: spectra, ranks, LP solutions.
    """

    theorem: str
    hypotheses: Tuple[Hypothesis, ...]
    conclusion: str
    ideal: Tuple[Tuple[Fraction, ...], ...] = ()
    ideal_space: str = ''
    certificates: Mapping[str, object] = {}

    @property
    def conclusive(self) -> bool:
        """`True` if a quotient was licensed."""
        return self.conclusion != NO_CONCLUSION

    @property
    def undecided(self) -> bool:
        """`True` if there is no conclusion and some hypothesis is undecided."""
        return not self.conclusive and any(
            h.status is HypothesisStatus.UNDECIDED for h in self.hypotheses
        )

    def hypothesis(self, name: str) -> Hypothesis:
        """Look a hypothesis up by name."""
        for each in self.hypotheses:
            if each.name == name:
                return each
        raise KeyError(name)

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            'theorem': self.theorem,
            'hypotheses': [h.to_json() for h in self.hypotheses],
            'conclusion': self.conclusion,
            'ideal': _matrix_json(self.ideal),
            'ideal_space': self.ideal_space,
            'certificates': dict(self.certificates),
        }


def _no_conclusion(
    theorem: str, hypotheses: Sequence[Hypothesis], **certificates: object
) -> FactorizationVerdict:
    failed = [h.name for h in hypotheses if not h.usable]
    _logger.warning(f"No conclusion from {theorem}; hypotheses not met: {failed}")
    return FactorizationVerdict(
        theorem, tuple(hypotheses), NO_CONCLUSION, certificates=certificates
    )


# Spectra ###


def semigroup_sigma(
    eigenvalues: Union[Spectrum, Iterable[Eigenvalue]], bound: int
) -> List[Eigenvalue]:
    """
    Sums of ``1..bound`` eigenvalues, with repetition: ``Σ_p`` truncated.

    Sums of exact eigenvalues are exact and appear once; sums involving enclosed
    eigenvalues are discs whose radii add up.

    >>> sums = semigroup_sigma(spectrum([[Fraction(1)]]), 3)
    >>> [str(e.value) for e in sums]
    ['1', '2', '3']

    :param bound: Largest number of summands, at least 1.
    """
    assert bound >= 1, f"Bound must be positive: {bound}"
    if isinstance(eigenvalues, Spectrum):
        eigenvalues = eigenvalues.eigenvalues

    distinct: List[Eigenvalue] = []
    for each in eigenvalues:
        if each not in distinct:
            distinct.append(each)

    sums: List[Eigenvalue] = []
    for size in range(1, bound + 1):
        for combination in itertools.combinations_with_replacement(distinct, size):
            total = combination[0]
            for each in combination[1:]:
                total = total + each
            if total not in sums:
                sums.append(total)
    # endfor
    return sorted(sums, key=lambda e: (e.center.real, e.center.imag))


class SpectralReport(NamedTuple):
    """
    Spectral data of one point ``p``.

    :param point: Coordinates of ``p``.
    :param field_spectrum: ``Spec(v_l(p))``.
    :param twist_spectrum: ``Spec(ad_{σ0(p)})``.
    :param sigma: ``Σ_p`` truncated at `bound` summands.
    :param two_jets: Disjointness of `twist_spectrum` and `field_spectrum`.
    :param semigroup: Disjointness of `twist_spectrum` and `sigma`.
    :param bound: Number of summands in `sigma`.
    """

    point: Tuple[Fraction, ...]
    field_spectrum: Spectrum
    twist_spectrum: Spectrum
    sigma: Tuple[Eigenvalue, ...]
    two_jets: Verdict
    semigroup: Verdict
    bound: int

    @property
    def exact(self) -> bool:
        """`True` if both spectra are exact, so that both verdicts are definite."""
        return self.field_spectrum.exact and self.twist_spectrum.exact

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            'point': [format_fraction(x) for x in self.point],
            'field_spectrum': self.field_spectrum.to_json(),
            'twist_spectrum': self.twist_spectrum.to_json(),
            'sigma': [e.to_json() for e in self.sigma],
            'two_jets': self.two_jets.value,
            'semigroup': self.semigroup.value,
            'bound': self.bound,
            'exact': self.exact,
        }


def spectral_report(
    action: ActionData,
    p: Sequence[Rational],
    bound: Optional[int] = None,
    mode: str = 'numeric',
    tolerance: float = DEFAULT_TOLERANCE,
) -> SpectralReport:
    """
    Spectra of ``v_l(p)`` and ``ad_{σ0(p)}`` and their comparisons.

    :param bound: Summands of ``Σ_p``; the truncation order of `action` if omitted.

    :raises InexactSpectrumError: `mode` is ``'exact'`` and a spectrum is not.
    """
    point = tuple(to_fraction(x) for x in p)
    assert len(point) == action.algebra.dim, "Point must be in the acting algebra"
    bound = action.order if bound is None else bound

    field_spectrum = spectrum(action.linear_part(point), mode, tolerance)
    ad = action.fiber.ad_matrix(action.constant_twist(point))
    twist_spectrum = spectrum(ad, mode, tolerance)
    sigma = semigroup_sigma(field_spectrum, bound)
    return SpectralReport(
        point,
        field_spectrum,
        twist_spectrum,
        tuple(sigma),
        spectra_disjoint(twist_spectrum.eigenvalues, field_spectrum.eigenvalues),
        spectra_disjoint(twist_spectrum.eigenvalues, sigma),
        bound,
    )


@log_calls(_logger, log_result=False)
def check_pe_factorization(
    action: ActionData,
    p: Sequence[Rational],
    mode: str = 'numeric',
    tolerance: float = DEFAULT_TOLERANCE,
) -> FactorizationVerdict:
    """
    Factorization through 2-jets when ``Spec(ad_{σ0(p)}) ∩ Spec(v_l(p)) = ∅``.

    The kernel part is the image of ``−L_{v_l(p)} + ad_{σ0(p)}`` on ``P²(V) ⊗ k``,
    computed exactly; its rank is recorded as a certificate.

    :raises InexactSpectrumError: `mode` is ``'exact'`` and a spectrum is not.
    """
    report = spectral_report(action, p, 1, mode, tolerance)
    hypothesis = Hypothesis(
        'spectra_disjoint',
        _from_verdict(report.two_jets),
        f"Spec(ad σ0(p)) vs Spec(v_l(p)): {report.two_jets.value}",
    )
    certificates: Dict[str, object] = {'spectra': report.to_json()}
    if not hypothesis.usable:
        return _no_conclusion(PE_TWO_JETS, [hypothesis], **certificates)

    # Only v_l and σ0 enter, so a linear action of order 2 suffices.
    linear = ActionData.linear(
        action.algebra, action.fiber, action.linear_parts, 2, action.sigma0
    )
    operator = twisted_module(linear, 2).action(report.point)
    image = linalg.row_basis(linalg.transpose(operator), len(operator))
    certificates.update(rank=len(image), dimension=len(operator))
    _logger.info(f"2-jet factorization, image of rank {len(image)}/{len(operator)}")
    return FactorizationVerdict(
        PE_TWO_JETS,
        (hypothesis,),
        TWO_JETS,
        tuple(tuple(row) for row in image),
        'P^2(V)⊗k',
        certificates,
    )


def check_spectral_condition(
    action: ActionData,
    p: Sequence[Rational],
    bound: Optional[int] = None,
    mode: str = 'numeric',
    tolerance: float = DEFAULT_TOLERANCE,
) -> Verdict:
    """
    Three-valued disjointness of ``Spec(ad_{σ0(p)})`` and the truncated ``Σ_p``.

    :raises InexactSpectrumError: `mode` is ``'exact'`` and a spectrum is not.
    """
    return spectral_report(action, p, bound, mode, tolerance).semigroup


# Center subspaces ###


def center_subspace(linear: Sequence[Sequence[Fraction]]) -> Matrix:
    """
    Basis of ``V_c``, the generalized eigenspaces with eigenvalues on ``iℝ``.

    >>> center_subspace([[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]])
    [[Fraction(1, 1), Fraction(0, 1)]]
    """
    return axis_decomposition(linear).center


class CenterFamily(NamedTuple):
    """``V_c(𝔠) = ∩ V_c(p)`` over sample points and its annihilator."""

    center: Matrix
    annihilator: Matrix


def center_subspace_family(
    points: Sequence[Sequence[Rational]], action: ActionData
) -> CenterFamily:
    """
    Intersection of the center subspaces of ``v_l(p)`` over `points`.

    The annihilator is the span of the annihilators of the single center subspaces;
    it is checked against the annihilator of the intersection.
    """
    assert len(points) > 0, "At least one point is needed"
    dim = action.dim
    centers = [center_subspace(action.linear_part(p)) for p in points]

    center = linalg.row_basis(centers[0], dim)
    for each in centers[1:]:
        center = linalg.intersection(center, each, dim)
    annihilators = [row for each in centers for row in linalg.annihilator(each, dim)]
    perp = linalg.row_basis(annihilators, dim)
    assert linalg.same_span(perp, linalg.annihilator(center, dim)), (
        "Annihilator of the intersection must be spanned by the annihilators"
    )
    return CenterFamily(center, perp)


class KernelIdeal(NamedTuple):
    """
    Ideal ``R_N·V_c^⊥`` and the quotient ``ℝ⟦V_c*⟧ ⊗ k`` truncated at order ``N``.

    :param generators: Basis of the ideal of ``R_N``.
    :param quotient: :data:`FIBER` when ``V_c = {0}``, :data:`CENTER_JETS` otherwise.
    :param quotient_dimension: Dimension of the quotient, including the factor
      ``dim k``.
    """

    generators: Tuple[TruncSeries, ...]
    quotient: str
    quotient_dimension: int


def kernel_ideal_from_center(
    vc_perp: Sequence[Sequence[Fraction]], dim: int, order: int, fiber_dim: int = 1
) -> KernelIdeal:
    """
    The ideal generated by the linear forms in `vc_perp`.

    >>> ideal = kernel_ideal_from_center([[Fraction(0), Fraction(1)]], 2, 1)
    >>> len(ideal.generators), ideal.quotient_dimension
    (1, 2)
    """
    forms = [
        TruncSeries.from_homogeneous_vector(dim, order, 1, row)
        for row in linalg.row_basis(vc_perp, dim)
    ]
    generators = ideal_span(forms, order)
    quotient = FIBER if linalg.rank(vc_perp, dim) == dim else CENTER_JETS
    size = len(monomials(dim, order))
    return KernelIdeal(
        tuple(generators), quotient, (size - len(generators)) * fiber_dim
    )


def _center_conclusion(
    theorem: str,
    hypotheses: Sequence[Hypothesis],
    action: ActionData,
    perp: Matrix,
    certificates: Dict[str, object],
) -> FactorizationVerdict:
    ideal = kernel_ideal_from_center(perp, action.dim, action.order, action.fiber.dim)
    certificates.update(quotient_dimension=ideal.quotient_dimension)
    if not ideal.generators:
        # V_c = V: the quotient is everything.
        return _no_conclusion(theorem, hypotheses, **certificates)

    _logger.info(f"{theorem}: factors through {ideal.quotient}")
    return FactorizationVerdict(
        theorem,
        tuple(hypotheses),
        ideal.quotient,
        tuple(tuple(g.to_vector()) for g in ideal.generators),
        'R_N',
        certificates,
    )


def _maurer_cartan(action: ActionData) -> Hypothesis:
    if mc_residual(action).is_zero():
        return Hypothesis('maurer_cartan', HypothesisStatus.HOLDS)
    return Hypothesis(
        'maurer_cartan', HypothesisStatus.FAILS, "Residual of the twists is non-zero"
    )


@log_calls(_logger, log_result=False)
def spectral_factorization(
    action: ActionData,
    points: Sequence[Sequence[Rational]],
    bound: Optional[int] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> FactorizationVerdict:
    """
    ``R·V_c(𝔠)^⊥ ⊗ k`` in the kernel when ``Spec(ad_{σ0(p)}) ∩ Σ_p = ∅`` on ``𝔠``.

    The cone ``𝔠`` is represented by `points`; the spectral condition is checked on
    each of them and ``V_c`` is intersected over them.
    """
    hypotheses = [_maurer_cartan(action)]
    reports = [spectral_report(action, p, bound, 'numeric', tolerance) for p in points]
    for index, report in enumerate(reports):
        hypotheses.append(
            Hypothesis(
                f'spectral_condition[{index}]',
                _from_verdict(report.semigroup),
                f"Spec(ad σ0(p)) vs Σ_p: {report.semigroup.value}",
            )
        )
    certificates: Dict[str, object] = {'spectra': [r.to_json() for r in reports]}
    if not all(h.usable for h in hypotheses):
        return _no_conclusion(SPECTRAL_CONDITION, hypotheses, **certificates)

    family = center_subspace_family(points, action)
    certificates.update(center=_matrix_json(family.center))
    return _center_conclusion(
        SPECTRAL_CONDITION, hypotheses, action, family.annihilator, certificates
    )


# Cones ###


class ConeSpec(NamedTuple):
    """Convex cone in ``p`` generated by finitely many non-zero vectors."""

    generators: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, generators: Sequence[Sequence[Rational]]) -> 'ConeSpec':
        """
        Validate and convert.

        :raises MismatchError: Generators of different lengths, or none.
        :raises PreconditionError: A generator is zero.
        """
        converted = tuple(tuple(to_fraction(x) for x in g) for g in generators)
        if not converted or len({len(g) for g in converted}) != 1:
            raise MismatchError("Cone generators must be non-empty of one length")
        for g in converted:
            if not any(g):
                raise PreconditionError("Cone generators must be non-zero")
        return cls(converted)

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return len(self.generators[0])

    def to_json(self) -> List[List[str]]:
        """Encode for reports."""
        return _matrix_json(self.generators)


class ConeCertificate(NamedTuple):
    """
    Exact certificate for (non-)pointedness.

    :param pointed: `True` if the cone contains no line.
    :param multipliers: ``λ ≥ 0`` with ``Σλ_i = 1`` and ``Σλ_i g_i = 0`` when the
      cone contains a line.
    :param separator: ``ψ`` with ``ψ·g_i ≥ 1`` for all generators when it does not.
    """

    pointed: bool
    multipliers: Optional[Tuple[Fraction, ...]]
    separator: Optional[Tuple[Fraction, ...]]

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            'pointed': self.pointed,
            'multipliers': None
            if self.multipliers is None
            else [format_fraction(x) for x in self.multipliers],
            'separator': None
            if self.separator is None
            else [format_fraction(x) for x in self.separator],
        }


def _lp_feasible(
    size: int,
    *,
    a_ub: Optional[List[List[Fraction]]] = None,
    b_ub: Optional[List[Fraction]] = None,
    a_eq: Optional[List[List[Fraction]]] = None,
    b_eq: Optional[List[Fraction]] = None,
) -> Optional[Vector]:
    # Zero objective; variables are non-negative.
    try:
        _, solution = linprog(
            SympyMatrix([[0] * size]),
            None if a_ub is None else SympyMatrix(a_ub),
            None if b_ub is None else SympyMatrix(b_ub),
            None if a_eq is None else SympyMatrix(a_eq),
            None if b_eq is None else SympyMatrix(b_eq),
        )
    except InfeasibleLPError:
        return None
    return [Fraction(int(x.p), int(x.q)) for x in solution]


@log_calls(_logger)
def cone_certificate(cone: ConeSpec) -> ConeCertificate:
    """
    Decide exactly whether `cone` contains a line, with both certificates tried.

    The cone contains a line exactly when ``Σλ_i g_i = 0`` has a solution with
    ``λ ≥ 0, Σλ_i = 1``; it is pointed exactly when some ``ψ`` has ``ψ·g_i ≥ 1`` for
    all ``i``. Both linear programs are solved with sympy's exact simplex and exactly
    one of them must be feasible.
    """
    generators = [list(g) for g in cone.generators]
    count, dim = len(generators), cone.dim

    a_eq = [[g[k] for g in generators] for k in range(dim)] + [[Fraction(1)] * count]
    b_eq = [Fraction(0)] * dim + [Fraction(1)]
    multipliers = _lp_feasible(count, a_eq=a_eq, b_eq=b_eq)

    # ψ = u − w with u, w ≥ 0.
    a_ub = [[-x for x in g] + list(g) for g in generators]
    split = _lp_feasible(2 * dim, a_ub=a_ub, b_ub=[Fraction(-1)] * count)
    separator = None if split is None else [u - w for u, w in zip(split, split[dim:])]

    assert (multipliers is None) != (separator is None), (
        "Exactly one of the alternatives must be feasible"
    )
    if multipliers is not None:
        assert sum(multipliers) == 1 and not any(
            linalg.matvec(linalg.transpose(generators), multipliers)
        ), "Multipliers must combine the generators to zero"
        return ConeCertificate(False, tuple(multipliers), None)

    assert separator is not None
    assert all(
        sum((x * y for x, y in zip(separator, g)), Fraction(0)) >= 1 for g in generators
    ), "Separator must be at least 1 on every generator"
    return ConeCertificate(True, None, tuple(separator))


def cone_pointed(cone: ConeSpec) -> bool:
    """
    `True` if the cone generated by `cone` contains no line.

    >>> cone_pointed(ConeSpec.of([[1, 0], [-1, 0]]))
    False
    """
    return cone_certificate(cone).pointed


# Semisimple p ###


def _cyclic_span(matrices: Sequence[Matrix], vector: Sequence[Fraction]) -> Matrix:
    dim = len(vector)
    span = linalg.row_basis([vector], dim)
    while True:
        images = [linalg.matvec(m, v) for m in matrices for v in span]
        grown = linalg.row_basis(list(span) + images, dim)
        if len(grown) == len(span):
            return span
        span = grown


def irreducibility_refutation(matrices: Sequence[Matrix]) -> Optional[Matrix]:
    """
    Search a proper non-zero subspace invariant under all `matrices`.

    Candidates are the invariant subspaces generated by the basis vectors of
    ``ker q(A)`` for each irreducible factor ``q`` of each characteristic polynomial,
    and by the standard basis. Finding none does not prove irreducibility.

    :returns: A basis of an invariant subspace, `None` if none was found.
    """
    assert len(matrices) > 0, "At least one matrix is needed"
    dim = len(matrices[0])
    candidates = list(linalg.identity(dim))
    for matrix in matrices:
        _, factors = linalg.to_poly(linalg.charpoly(matrix)).factor_list()
        for factor, _ in factors:
            kernel = linalg.nullspace(
                linalg.poly_at_matrix(linalg.from_poly(factor), matrix), dim
            )
            candidates.extend(kernel)
    # endfor

    for vector in candidates:
        span = _cyclic_span(matrices, vector)
        if 0 < len(span) < dim:
            _logger.debug(f"Invariant subspace {span} found")
            return span
    return None


def _hyperbolic_eigenvalue(linear: Matrix) -> Optional[Eigenvalue]:
    for eigenvalue in spectrum(linear).eigenvalues:
        value = eigenvalue.value
        if value is not None and value.is_real() and not value.is_zero():
            return eigenvalue
    return None


def _semisimple(action: ActionData) -> Hypothesis:
    try:
        action.algebra.check_semisimple()
    except NotSemisimpleError as error:
        return Hypothesis('semisimple', HypothesisStatus.FAILS, str(error))
    return Hypothesis(
        'semisimple', HypothesisStatus.HOLDS, "Killing form non-degenerate"
    )


def _noncompact_simple(action: ActionData, asserted: bool) -> Hypothesis:
    if NONCOMPACT_SIMPLE in action.algebra.tags:
        return Hypothesis('noncompact_simple', HypothesisStatus.HOLDS, "Tagged")
    if asserted:
        return Hypothesis('noncompact_simple', HypothesisStatus.ASSERTED)
    return Hypothesis(
        'noncompact_simple', HypothesisStatus.FAILS, f"{action.algebra} is not tagged"
    )


def _irreducible(action: ActionData, asserted: bool) -> Hypothesis:
    matrices = list(action.linear_parts)
    if all(linalg.is_zero(m) for m in matrices):
        return Hypothesis('irreducible_nontrivial', HypothesisStatus.FAILS, "Trivial")
    if action.dim == 1:
        return Hypothesis('irreducible_nontrivial', HypothesisStatus.HOLDS, "Line")

    invariant = irreducibility_refutation(matrices)
    if invariant is not None:
        return Hypothesis(
            'irreducible_nontrivial',
            HypothesisStatus.FAILS,
            f"Invariant subspace {_matrix_json(invariant)}",
        )
    if asserted:
        return Hypothesis('irreducible_nontrivial', HypothesisStatus.ASSERTED)
    return Hypothesis('irreducible_nontrivial', HypothesisStatus.UNDECIDED)


@log_calls(_logger, log_result=False)
def semisimple_pipeline(
    action: ActionData,
    cone: ConeSpec,
    *,
    simple_noncompact: bool = False,
    irreducible: bool = False,
) -> FactorizationVerdict:
    """
    Verdict chain for semisimple ``p``: normalize, then pointed cone or ``k``.

    With the twist gauged to ``σ0``, the restriction to ``g`` factors through
    ``ℝ⟦V_c(𝔠)*⟧ ⊗ k``. ``V_c`` is intersected over the cone generators, which gives
    a superset of ``V_c(𝔠)``, so a ``{0}`` result is sound. When the cone is not
    pointed, contains a hyperbolic generator and ``v_l`` is irreducible and
    non-trivial, ``V_c(𝔠) = {0}`` and the representation factors through ``k``.

    :param simple_noncompact: Assert that ``p`` is simple and non-compact when its
      tags do not say so.
    :param irreducible: Assert irreducibility of ``v_l`` when the search for invariant
      subspaces does not refute it.

    :raises MismatchError: The cone does not live in ``p``.
    """
    if cone.dim != action.algebra.dim:
        raise MismatchError(
            f"Cone in dimension {cone.dim} for the {action.algebra.dim}-dim "
            f"{action.algebra}"
        )

    hypotheses = [_maurer_cartan(action), _semisimple(action)]
    hypotheses.append(_noncompact_simple(action, simple_noncompact))
    if not all(h.usable for h in hypotheses):
        return _no_conclusion(SEMISIMPLE_CONE, hypotheses)

    certificates: Dict[str, object] = {'cone': cone.to_json()}
    try:
        normal = normalize_twist_semisimple(action)
    except PreconditionError as error:
        hypotheses.append(
            Hypothesis('twist_normalized', HypothesisStatus.FAILS, str(error))
        )
        return _no_conclusion(SEMISIMPLE_CONE, hypotheses, **certificates)
    hypotheses.append(Hypothesis('twist_normalized', HypothesisStatus.HOLDS))
    certificates.update(sigma0=_matrix_json(normal.action.sigma0))

    geometry = cone_certificate(cone)
    certificates.update(pointedness=geometry.to_json())
    hypotheses.append(
        Hypothesis(
            'cone_not_pointed',
            HypothesisStatus.FAILS if geometry.pointed else HypothesisStatus.HOLDS,
        )
    )

    hyperbolic: List[Tuple[int, Eigenvalue]] = []
    for index, g in enumerate(cone.generators):
        eigenvalue = _hyperbolic_eigenvalue(action.linear_part(g))
        if eigenvalue is not None:
            hyperbolic.append((index, eigenvalue))
    hypotheses.append(
        Hypothesis(
            'hyperbolic_generator',
            HypothesisStatus.HOLDS if hyperbolic else HypothesisStatus.FAILS,
            f"Generator {hyperbolic[0][0]}" if hyperbolic else '',
        )
    )
    if hyperbolic:
        certificates.update(hyperbolic=hyperbolic[0][1].to_json())
    hypotheses.append(_irreducible(action, irreducible))

    family = center_subspace_family(cone.generators, action)
    perp = family.annihilator
    if not geometry.pointed and hyperbolic and hypotheses[-1].usable:
        _logger.info("Non-pointed cone with a hyperbolic element: V_c = {0}")
        perp = linalg.identity(action.dim)
    certificates.update(center=_matrix_json(family.center))
    return _center_conclusion(SEMISIMPLE_CONE, hypotheses, action, perp, certificates)
