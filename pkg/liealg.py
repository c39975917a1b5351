"""
Finite dimensional real Lie algebras given by rational structure constants.

Elements are coordinate vectors (lists of `Fraction`) in the algebra's basis. The
structure constants ``c[i][j][k]`` are the coordinates of ``[e_i, e_j]``, so that
``[x, y]_k = Σ_{i,j} x_i y_j c[i][j][k]``.

Besides brackets and the Killing form this module knows about spectra of rational
matrices. Eigenvalues are exact Gaussian rationals when the characteristic polynomial
allows it, otherwise discs around numerically computed roots. Comparisons between
spectra then have three outcomes, see :class:`Verdict`.
"""

from enum import Enum
from fractions import Fraction
import itertools
import logging
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from sympy import QQ_I, Poly, oo

from . import linalg
from .decorators import log_calls
from .errors import (
    InexactSpectrumError,
    MismatchError,
    MixedSpectrumError,
    NotSemisimpleError,
)
from .factory import FunctionRegistryFactory
from .linalg import Matrix, Vector
from .rational import (
    GaussianRational,
    Rational,
    is_rational_square,
    rational_sqrt,
    to_fraction,
)

_logger = logging.getLogger(__name__)

StructureConstants = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

COMPACT = 'compact'
"""Tag of compact (semisimple) algebras, with negative definite Killing form."""

SIMPLE = 'simple'
"""Tag of simple algebras."""

NONCOMPACT_SIMPLE = 'noncompact_simple'
"""Tag of simple algebras without compact ideals."""

DEFAULT_TOLERANCE = 1e-9
"""Smallest radius of numerically computed eigenvalues."""


class LieAlgebra:
    """
    Lie algebra by structure constants.

    Antisymmetry of the constants is required; the Jacobi identity is checked
    separately by :meth:`verify_jacobi` so that broken data can be represented.

    :param structure: ``structure[i][j][k]`` is the ``k``-th coordinate of
      ``[e_i, e_j]``.
    :param name: Optional name, e.g. ``'su2'``.
    :param tags: Properties asserted by the caller, e.g. :data:`COMPACT`.
    :param basis_names: Names of the basis elements for reports.
    """

    def __init__(
        self,
        structure: Sequence[Sequence[Sequence[Rational]]],
        *,
        name: Optional[str] = None,
        tags: Iterable[str] = (),
        basis_names: Optional[Sequence[str]] = None,
    ) -> None:
        dim = len(structure)
        self.structure: StructureConstants = tuple(
            tuple(tuple(to_fraction(c) for c in row) for row in plane)
            for plane in structure
        )
        assert all(
            len(plane) == dim and all(len(row) == dim for row in plane)
            for plane in self.structure
        ), "Structure constants must have shape (n, n, n)"
        assert all(
            self.structure[i][j][k] == -self.structure[j][i][k]
            for i, j, k in itertools.product(range(dim), repeat=3)
        ), "Structure constants must be antisymmetric"

        self.dim = dim
        self.name = name
        self.tags: FrozenSet[str] = frozenset(tags)
        self.basis_names: Tuple[str, ...] = (
            tuple(basis_names)
            if basis_names is not None
            else tuple(f'e{i + 1}' for i in range(dim))
        )
        assert len(self.basis_names) == dim

        # (i, j, k, c) with c != 0, the only data brackets need.
        self.nonzero: Tuple[Tuple[int, int, int, Fraction], ...] = tuple(
            (i, j, k, c)
            for i, plane in enumerate(self.structure)
            for j, row in enumerate(plane)
            for k, c in enumerate(row)
            if c != 0
        )

    @classmethod
    def abelian(cls, dim: int, name: Optional[str] = None) -> 'LieAlgebra':
        """Abelian algebra ``ℝ^dim``."""
        zero = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        return cls(zero, name=name)

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[Sequence[Sequence[GaussianRational]]],
        **kwargs: object,
    ) -> 'LieAlgebra':
        """
        Structure constants of a real matrix Lie algebra.

        The matrices are complex (Gaussian rational) and must span, over ℝ, a space
        closed under commutators with rational coordinates.

        :raises ValueError: A commutator leaves the real span of `matrices`.
        """
        flat = [_realify(matrix) for matrix in matrices]
        structure = []
        for one in matrices:
            plane = []
            for another in matrices:
                coordinates = linalg.coordinates(
                    flat, _realify(_complex_commutator(one, another))
                )
                if coordinates is None:
                    raise ValueError("Matrices are not closed under commutators")
                plane.append(coordinates)
            structure.append(plane)

        return cls(structure, **kwargs)  # type: ignore[arg-type]

    def basis_vector(self, i: int) -> Vector:
        """Coordinates of ``e_i``."""
        return [Fraction(int(i == j)) for j in range(self.dim)]

    def zero(self) -> Vector:
        """Coordinates of ``0``."""
        return [Fraction(0)] * self.dim

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Lie bracket ``[x, y]``."""
        result = [Fraction(0)] * self.dim
        for i, j, k, c in self.nonzero:
            if x[i] and y[j]:
                result[k] += x[i] * y[j] * c
        return result

    def ad_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """
        Matrix of ``ad_x``; column ``j`` holds ``[x, e_j]``.

        >>> su2 = get_algebra('su2')
        >>> su2.ad_matrix([1, 0, 0])[2]
        [Fraction(0, 1), Fraction(1, 1), Fraction(0, 1)]
        """
        matrix = linalg.zeros(self.dim, self.dim)
        for i, j, k, c in self.nonzero:
            if x[i]:
                matrix[k][j] += x[i] * c
        return matrix

    def killing(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """Killing form ``trace(ad_x ∘ ad_y)``."""
        product = linalg.matmul(self.ad_matrix(x), self.ad_matrix(y))
        return sum((product[i][i] for i in range(self.dim)), Fraction(0))

    def killing_matrix(self) -> Matrix:
        """Gram matrix of the Killing form in the basis."""
        ads = [self.ad_matrix(self.basis_vector(i)) for i in range(self.dim)]
        pairs = [(m, n) for m in range(self.dim) for n in range(self.dim)]
        return [
            [
                sum((a[m][n] * b[n][m] for m, n in pairs), Fraction(0))
                for b in ads
            ]
            for a in ads
        ]

    def is_semisimple(self) -> bool:
        """Cartan's criterion: the Killing form is non-degenerate (exact)."""
        return self.dim > 0 and linalg.det(self.killing_matrix()) != 0

    def check_semisimple(self) -> None:
        """
        Check Cartan's criterion.

        :raises NotSemisimpleError: The Killing form is degenerate.
        """
        if not self.is_semisimple():
            raise NotSemisimpleError(f"Killing form of {self} is degenerate")

    def is_negative_definite(self) -> bool:
        """Check that the Killing form is negative definite (leading minors)."""
        killing = self.killing_matrix()
        return all(
            (-1) ** size * linalg.det([row[:size] for row in killing[:size]]) > 0
            for size in range(1, self.dim + 1)
        )

    def check_invariance(
        self, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]
    ) -> bool:
        """Check ``κ([x,y],z) + κ(y,[x,z]) = 0``."""
        return (
            self.killing(self.bracket(x, y), z) + self.killing(y, self.bracket(x, z))
            == 0
        )

    def verify_jacobi(self) -> bool:
        """Expand the Jacobi identity on all basis triples (exact)."""
        basis = [self.basis_vector(i) for i in range(self.dim)]
        for x, y, z in itertools.combinations(basis, 3):
            total = linalg.add(
                [self.bracket(x, self.bracket(y, z))],
                linalg.add(
                    [self.bracket(y, self.bracket(z, x))],
                    [self.bracket(z, self.bracket(x, y))],
                ),
            )
            if not linalg.is_zero(total):
                return False
        return True

    def is_homomorphism(
        self, images: Sequence[Sequence[Fraction]], target: 'LieAlgebra'
    ) -> bool:
        """
        Check that ``e_i ↦ images[i]`` is a Lie algebra homomorphism into `target`.
        """
        assert len(images) == self.dim
        for i, j in itertools.combinations(range(self.dim), 2):
            bracket = self.bracket(self.basis_vector(i), self.basis_vector(j))
            image = linalg.matvec(linalg.transpose(images), bracket) if images else []
            if image != target.bracket(images[i], images[j]):
                return False
        return True

    def check_same(self, other: 'LieAlgebra') -> None:
        """
        :raises MismatchError: `other` has different structure constants.
        """
        if self is not other and self.structure != other.structure:
            raise MismatchError(f"Lie algebras {self} and {other} differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.structure == other.structure

    def __hash__(self) -> int:
        return hash(self.structure)

    def __repr__(self) -> str:
        return f'LieAlgebra(name={self.name!r}, dim={self.dim})'

    def __str__(self) -> str:
        return self.name if self.name is not None else f'<{self.dim}-dim algebra>'


def _complex_commutator(
    one: Sequence[Sequence[GaussianRational]],
    another: Sequence[Sequence[GaussianRational]],
) -> List[List[GaussianRational]]:
    def _product(
        a: Sequence[Sequence[GaussianRational]], b: Sequence[Sequence[GaussianRational]]
    ) -> List[List[Tuple[Fraction, Fraction]]]:
        size = len(a)
        return [
            [
                (
                    sum(
                        (
                            a[i][m].re * b[m][j].re - a[i][m].im * b[m][j].im
                            for m in range(size)
                        ),
                        Fraction(0),
                    ),
                    sum(
                        (
                            a[i][m].re * b[m][j].im + a[i][m].im * b[m][j].re
                            for m in range(size)
                        ),
                        Fraction(0),
                    ),
                )
                for j in range(size)
            ]
            for i in range(size)
        ]

    ab = _product(one, another)
    ba = _product(another, one)
    return [
        [GaussianRational(x[0] - y[0], x[1] - y[1]) for x, y in zip(row, other)]
        for row, other in zip(ab, ba)
    ]


def _realify(matrix: Sequence[Sequence[GaussianRational]]) -> Vector:
    return [x.re for row in matrix for x in row] + [x.im for row in matrix for x in row]


algebra_registry = FunctionRegistryFactory[Callable[[], LieAlgebra]]('algebra')
"""Named Lie algebras; see :func:`get_algebra`."""


def get_algebra(name: str) -> LieAlgebra:
    """
    Built-in Lie algebra by name.

    :raises KeyError: Unknown name.
    """
    return algebra_registry.create(name)()


def _cyclic_su2(name: str) -> LieAlgebra:
    structure = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        structure[i][j][k] = 1
        structure[j][i][k] = -1
    return LieAlgebra(structure, name=name, tags=(COMPACT, SIMPLE))


@algebra_registry.register('su2')
def su2() -> LieAlgebra:
    """``su(2)`` in the cyclic basis ``[e1, e2] = e3``, ``[e2, e3] = e1``, ..."""
    return _cyclic_su2('su2')


@algebra_registry.register('so3')
def so3() -> LieAlgebra:
    """``so(3)``, isomorphic to :func:`su2` with the same structure constants."""
    return _cyclic_su2('so3')


@algebra_registry.register('sl2R')
def sl2r() -> LieAlgebra:
    """``sl(2, ℝ)`` in the basis ``(H, E, F)``."""
    structure = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k, c in ((0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)):
        structure[i][j][k] = c
        structure[j][i][k] = -c
    return LieAlgebra(
        structure,
        name='sl2R',
        tags=(SIMPLE, NONCOMPACT_SIMPLE),
        basis_names=('H', 'E', 'F'),
    )


def _gell_mann() -> List[List[List[GaussianRational]]]:
    one = GaussianRational.of(1)
    zero = GaussianRational.of(0)
    i = GaussianRational.of(0, 1)
    minus_i = GaussianRational.of(0, -1)

    def _matrix(
        entries: Dict[Tuple[int, int], GaussianRational],
    ) -> List[List[GaussianRational]]:
        return [[entries.get((r, c), zero) for c in range(3)] for r in range(3)]

    return [
        _matrix({(0, 1): one, (1, 0): one}),
        _matrix({(0, 1): minus_i, (1, 0): i}),
        _matrix({(0, 0): one, (1, 1): GaussianRational.of(-1)}),
        _matrix({(0, 2): one, (2, 0): one}),
        _matrix({(0, 2): minus_i, (2, 0): i}),
        _matrix({(1, 2): one, (2, 1): one}),
        _matrix({(1, 2): minus_i, (2, 1): i}),
        # λ8 without its irrational normalization
        _matrix({(0, 0): one, (1, 1): one, (2, 2): GaussianRational.of(-2)}),
    ]


@algebra_registry.register('su3')
def su3() -> LieAlgebra:
    """``su(3)`` spanned by ``−iλ_a/2`` with ``λ_8`` rescaled to ``diag(1, 1, −2)``."""
    half = Fraction(1, 2)
    matrices = [
        [[GaussianRational(x.im * half, -x.re * half) for x in row] for row in matrix]
        for matrix in _gell_mann()
    ]
    return LieAlgebra.from_matrices(
        matrices,
        name='su3',
        tags=(COMPACT, SIMPLE),
        basis_names=tuple(f'X{a}' for a in range(1, 9)),
    )


@algebra_registry.register('R')
def real_line() -> LieAlgebra:
    """Abelian ``ℝ``."""
    return LieAlgebra.abelian(1, 'R')


@algebra_registry.register('R2')
def real_plane() -> LieAlgebra:
    """Abelian ``ℝ²``."""
    return LieAlgebra.abelian(2, 'R2')


STANDARD_TORI: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    'su2': ((0, 0, 1),),
    'so3': ((0, 0, 1),),
    'su3': ((0, 0, 1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 1)),
}
"""Bases of maximal abelian subalgebras of the built-in compact algebras."""


# Chevalley-Jordan decomposition ###


def chevalley_jordan(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, Matrix]:
    """
    Split a rational matrix into commuting semisimple and nilpotent parts.

    Newton iteration ``S ← S − p(S) p'(S)⁻¹`` with ``p`` the squarefree part of the
    characteristic polynomial; ``p'(S)`` stays invertible and the iteration ends
    after at most ``log2(n) + 1`` steps.

    >>> chevalley_jordan([[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]])[1]
    [[Fraction(0, 1), Fraction(1, 1)], [Fraction(0, 1), Fraction(0, 1)]]

    :returns: ``(S, N)`` with ``A = S + N``.
    """
    dim = len(matrix)
    if dim == 0:
        return [], []

    squarefree = linalg.to_poly(linalg.charpoly(matrix)).sqf_part()
    coefficients = linalg.from_poly(squarefree)
    derivative = linalg.from_poly(squarefree.diff())

    semisimple = [list(row) for row in matrix]
    while True:
        value = linalg.poly_at_matrix(coefficients, semisimple)
        if linalg.is_zero(value):
            break
        correction = linalg.matmul(
            value, linalg.inverse(linalg.poly_at_matrix(derivative, semisimple))
        )
        semisimple = linalg.add(semisimple, linalg.scale(Fraction(-1), correction))
    # endwhile

    nilpotent = linalg.add(matrix, linalg.scale(Fraction(-1), semisimple))
    return semisimple, nilpotent


def semisimple_part(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    """First component of :func:`chevalley_jordan`."""
    return chevalley_jordan(matrix)[0]


# Spectra ###


class Verdict(Enum):
    """Outcome of comparing spectra that may be only numerically known."""

    DISJOINT = 'disjoint'
    INTERSECTS = 'intersects'
    UNDECIDED = 'undecided'


class Eigenvalue(NamedTuple):
    """
    An eigenvalue, exact or enclosed in a disc.

    :param value: Exact value, `None` if only the disc is known.
    :param center: Floating point value (the center of the disc).
    :param radius: Radius of a disc guaranteed to contain the eigenvalue; ``0`` for
      exact values.
    :param minimal_polynomial: Monic irreducible polynomial of the eigenvalue
      (highest coefficient first) when known. Eigenvalues obtained by arithmetic
      have none.
    :param root_index: Index among the numerically sorted roots of
      `minimal_polynomial`.
    """

    value: Optional[GaussianRational]
    center: complex
    radius: float = 0.0
    minimal_polynomial: Optional[Tuple[Fraction, ...]] = None
    root_index: Optional[int] = None

    @classmethod
    def exact(cls, value: GaussianRational) -> 'Eigenvalue':
        """Exactly known eigenvalue."""
        return cls(value, value.to_complex())

    @property
    def is_exact(self) -> bool:
        """`True` if the value is known exactly."""
        return self.value is not None

    def contains(self, point: complex) -> bool:
        """Check whether `point` lies in the disc."""
        return abs(point - self.center) <= self.radius

    def __add__(self, other: 'Eigenvalue') -> 'Eigenvalue':  # type: ignore[override]
        if self.value is not None and other.value is not None:
            return Eigenvalue.exact(
                GaussianRational(
                    self.value.re + other.value.re, self.value.im + other.value.im
                )
            )
        return Eigenvalue(None, self.center + other.center, self.radius + other.radius)

    def to_json(self) -> Dict[str, object]:
        """Encode for reports; floats only appear for non-exact values."""
        if self.value is not None:
            return {'exact': True, 'value': self.value.to_json()}
        return {
            'exact': False,
            'center': [self.center.real, self.center.imag],
            'radius': self.radius,
        }


class Spectrum(NamedTuple):
    """Eigenvalues with multiplicity, in a deterministic order."""

    eigenvalues: Tuple[Eigenvalue, ...]

    @property
    def exact(self) -> bool:
        """`True` if all eigenvalues are known exactly."""
        return all(each.is_exact for each in self.eigenvalues)

    def distinct(self) -> List[Eigenvalue]:
        """Eigenvalues without repetitions."""
        seen: List[Eigenvalue] = []
        for each in self.eigenvalues:
            if each not in seen:
                seen.append(each)
        return seen

    def to_json(self) -> Dict[str, object]:
        """Encode for reports."""
        return {
            'exact': self.exact,
            'eigenvalues': [each.to_json() for each in self.eigenvalues],
        }


def _monic(poly: Poly) -> Tuple[Fraction, ...]:
    return tuple(linalg.from_poly(poly.monic()))


def _factor_roots(factor: Poly, tolerance: float) -> List[Eigenvalue]:
    coefficients = linalg.from_poly(factor)
    degree = factor.degree()
    if degree == 1:
        a, b = coefficients
        return [Eigenvalue.exact(GaussianRational(-b / a))]

    if degree == 2:
        a, b, c = coefficients
        discriminant = b * b - 4 * a * c
        if is_rational_square(-discriminant):
            re = -b / (2 * a)
            im = rational_sqrt(-discriminant) / (2 * a)
            return [
                Eigenvalue.exact(GaussianRational(re, -abs(im))),
                Eigenvalue.exact(GaussianRational(re, abs(im))),
            ]

    floats = [float(c) for c in coefficients]
    slopes = [float(c) * (degree - i) for i, c in enumerate(coefficients[:-1])]
    roots = sorted(
        (complex(root) for root in factor.nroots(n=30)),
        key=lambda z: (round(z.real, 12), round(z.imag, 12)),
    )
    eigenvalues = []
    for index, root in enumerate(roots):
        value = _horner(floats, root)
        slope = _horner(slopes, root)
        bound = degree * abs(value / slope) if slope != 0 else float('inf')
        eigenvalues.append(
            Eigenvalue(None, root, max(bound, tolerance), _monic(factor), index)
        )
    return eigenvalues


def _horner(coefficients: Sequence[float], point: complex) -> complex:
    result = 0j
    for c in coefficients:
        result = result * point + c
    return result


def _sort_key(eigenvalue: Eigenvalue) -> Tuple[float, float]:
    return eigenvalue.center.real, eigenvalue.center.imag


def spectrum(
    matrix: Sequence[Sequence[Fraction]],
    mode: str = 'numeric',
    tolerance: float = DEFAULT_TOLERANCE,
) -> Spectrum:
    """
    Eigenvalues of a rational matrix, with multiplicities.

    The characteristic polynomial is factored over ℚ. Roots of linear factors and
    of quadratic factors whose roots lie in ℚ(i) are exact; all other roots are
    enclosed in discs of radius ``max(n|q(z)/q'(z)|, tolerance)`` around the
    numerical root ``z`` of the degree ``n`` factor ``q``.

    :param mode: ``'exact'`` to refuse non-exact eigenvalues, ``'numeric'`` to
      accept them.

    :raises InexactSpectrumError: Mode is ``'exact'`` and some eigenvalue is not a
      Gaussian rational.
    """
    assert mode in ('exact', 'numeric'), f"Unknown mode {mode!r}"
    if len(matrix) == 0:
        return Spectrum(())

    _, factors = linalg.to_poly(linalg.charpoly(matrix)).factor_list()
    eigenvalues = []
    for factor, multiplicity in factors:
        for root in _factor_roots(factor, tolerance):
            eigenvalues.extend([root] * multiplicity)

    result = Spectrum(tuple(sorted(eigenvalues, key=_sort_key)))
    if mode == 'exact' and not result.exact:
        polynomial = linalg.to_poly(linalg.charpoly(matrix)).as_expr()
        raise InexactSpectrumError(
            f"Characteristic polynomial {polynomial} has roots outside ℚ(i)"
        )
    return result


def compare_eigenvalues(one: Eigenvalue, another: Eigenvalue) -> Verdict:
    """
    Decide whether two eigenvalues are equal.

    :returns: `Verdict.INTERSECTS` if they are equal, `Verdict.DISJOINT` if they
      differ and `Verdict.UNDECIDED` if the available precision cannot tell.
    """
    if one.value is not None and another.value is not None:
        return Verdict.INTERSECTS if one.value == another.value else Verdict.DISJOINT

    if one.value is not None or another.value is not None:
        exact, other = (one, another) if one.value is not None else (another, one)
        if other.minimal_polynomial is not None:
            # Irreducible of degree >= 2 without roots in ℚ(i).
            return Verdict.DISJOINT
        return Verdict.UNDECIDED if other.contains(exact.center) else Verdict.DISJOINT

    if one.minimal_polynomial is not None and another.minimal_polynomial is not None:
        same = (one.minimal_polynomial, one.root_index) == (
            another.minimal_polynomial,
            another.root_index,
        )
        return Verdict.INTERSECTS if same else Verdict.DISJOINT

    overlap = abs(one.center - another.center) <= one.radius + another.radius
    return Verdict.UNDECIDED if overlap else Verdict.DISJOINT


def spectra_disjoint(
    one: Iterable[Eigenvalue], another: Iterable[Eigenvalue]
) -> Verdict:
    """
    Three-valued disjointness of two sets of eigenvalues.

    A definite common element gives `Verdict.INTERSECTS`; otherwise any undecided
    pair gives `Verdict.UNDECIDED`.
    """
    others = list(another)
    undecided = False
    for x in one:
        for y in others:
            verdict = compare_eigenvalues(x, y)
            if verdict is Verdict.INTERSECTS:
                return verdict
            undecided = undecided or verdict is Verdict.UNDECIDED
    return Verdict.UNDECIDED if undecided else Verdict.DISJOINT


# Imaginary axis ###


class AxisDecomposition(NamedTuple):
    """
    Generalized eigenspaces of a rational matrix grouped by the imaginary axis.

    :param center: Basis of the sum over eigenvalues with zero real part.
    :param off_axis: Basis of the sum over eigenvalues with non-zero real part.
    """

    center: Matrix
    off_axis: Matrix


def _on_axis(factor: Poly) -> bool:
    coefficients = linalg.from_poly(factor)
    if factor.degree() == 1:
        return coefficients[1] == 0

    if any(c != 0 for c in coefficients[-2::-2]):
        # Not even, so no root on the axis.
        return False

    folded = linalg.to_poly(coefficients[::2])
    negative = folded.count_roots(-oo, 0)
    if negative == 0:
        return False
    if negative == folded.degree():
        return True
    raise MixedSpectrumError(
        f"Factor {factor.as_expr()} has roots on and off the imaginary axis"
    )


def axis_decomposition(matrix: Sequence[Sequence[Fraction]]) -> AxisDecomposition:
    """
    Split ℚ^n into the center and off-axis generalized eigenspaces of `matrix`.

    Each irreducible factor of the characteristic polynomial is on the imaginary
    axis when it is ``x`` or an even polynomial ``q(x) = r(x²)`` with all roots of
    ``r`` negative (Sturm count). The two subspaces are the kernels of the products
    of the on-axis and off-axis factors (with multiplicity) evaluated at `matrix`.

    :raises MixedSpectrumError: Never for rational matrices: an irreducible factor
      has its roots either all on or all off the axis. Kept as a guard.
    """
    dim = len(matrix)
    if dim == 0:
        return AxisDecomposition([], [])

    _, factors = linalg.to_poly(linalg.charpoly(matrix)).factor_list()
    on = linalg.to_poly([Fraction(1)])
    off = linalg.to_poly([Fraction(1)])
    for factor, multiplicity in factors:
        if _on_axis(factor):
            on = on * factor**multiplicity
        else:
            off = off * factor**multiplicity

    def _kernel(poly: Poly) -> Matrix:
        value = linalg.poly_at_matrix(linalg.from_poly(poly), matrix)
        return linalg.nullspace(value, dim)

    return AxisDecomposition(_kernel(on), _kernel(off))


# Cartan data ###


class Root(NamedTuple):
    """
    A root with its root vector in the complexification.

    :param values: ``α(t_j)`` for the torus basis ``t_j``.
    :param vector: Coordinates of ``X_α`` over ℚ(i).
    """

    values: Tuple[GaussianRational, ...]
    vector: Tuple[GaussianRational, ...]


class CartanData(NamedTuple):
    """
    Maximal abelian subalgebra and its roots.

    :param torus: Basis of ``t``.
    :param roots: Roots with root vectors, ``[t_j, X_α] = α(t_j) X_α``.
    :param complement: Real basis of the sum of root spaces (real points of
      ``⊕ k_α``), so that ``k = t ⊕ complement``.
    """

    torus: Tuple[Vector, ...]
    roots: Tuple[Root, ...]
    complement: Tuple[Vector, ...]


_GENERIC_WEIGHTS = ((1, 2, 5, 11), (1, 3, 7, 13), (2, 3, 11, 17), (1, 1, 1, 1))


def _gaussian_apply(
    matrix: Sequence[Sequence[Fraction]], vector: Sequence[GaussianRational]
) -> List[GaussianRational]:
    return [
        GaussianRational(
            sum((a * x.re for a, x in zip(row, vector)), Fraction(0)),
            sum((a * x.im for a, x in zip(row, vector)), Fraction(0)),
        )
        for row in matrix
    ]


def _eigenvalue_of(
    image: Sequence[GaussianRational], vector: Sequence[GaussianRational]
) -> Optional[GaussianRational]:
    # `image` must be a multiple of `vector`.
    pivot = next(i for i, x in enumerate(vector) if not x.is_zero())
    a, b = vector[pivot].to_domain(), image[pivot].to_domain()
    ratio = QQ_I.quo(b, a)
    value = GaussianRational.from_domain(ratio)
    scaled = [GaussianRational.from_domain(x.to_domain() * ratio) for x in vector]
    return value if scaled == list(image) else None


@log_calls(_logger, log_result=False)
def cartan_from_torus(
    algebra: LieAlgebra, torus: Sequence[Sequence[Rational]]
) -> CartanData:
    """
    Root data by simultaneous diagonalization over ℚ(i).

    A generic combination ``H`` of the torus is diagonalized; its eigenspaces for
    non-zero eigenvalues are one dimensional and are common eigenvectors of the
    whole torus.

    :raises InexactSpectrumError: Roots are not Gaussian rationals.
    :raises ValueError: `torus` does not consist of commuting elements or no generic
      element was found.
    """
    basis = [[to_fraction(x) for x in t] for t in torus]
    for x, y in itertools.combinations(basis, 2):
        if any(algebra.bracket(x, y)):
            raise ValueError("Torus elements do not commute")

    ads = [algebra.ad_matrix(t) for t in basis]
    for weights in _GENERIC_WEIGHTS:
        generic = algebra.zero()
        for w, t in zip(weights, basis):
            generic = [g + w * x for g, x in zip(generic, t)]
        ad_generic = algebra.ad_matrix(generic)

        distinct = spectrum(ad_generic, mode='exact').distinct()
        roots = []
        generic_enough = True
        for eigenvalue in distinct:
            assert eigenvalue.value is not None
            if eigenvalue.value.is_zero():
                continue
            re, im = eigenvalue.value.re, eigenvalue.value.im
            shifted = [
                [
                    GaussianRational(x - re, -im) if i == j else GaussianRational(x)
                    for j, x in enumerate(row)
                ]
                for i, row in enumerate(ad_generic)
            ]
            eigenvectors = linalg.gaussian_nullspace(shifted, algebra.dim)
            if len(eigenvectors) != 1:
                generic_enough = False
                break
            vector = eigenvectors[0]
            values = [_eigenvalue_of(_gaussian_apply(ad, vector), vector) for ad in ads]
            if any(value is None for value in values):
                generic_enough = False
                break
            roots.append(Root(tuple(values), tuple(vector)))  # type: ignore[arg-type]

        if generic_enough:
            complement = linalg.row_basis(
                [[x.re for x in root.vector] for root in roots]
                + [[x.im for x in root.vector] for root in roots],
                algebra.dim,
            )
            _logger.debug(f"{len(roots)} roots for torus of dimension {len(basis)}")
            return CartanData(tuple(basis), tuple(roots), tuple(complement))

        _logger.debug(f"Torus weights {weights} not generic")
    # endfor

    raise ValueError("No generic torus element found")


def standard_cartan(algebra: LieAlgebra) -> CartanData:
    """
    Root data of a built-in compact algebra.

    :raises KeyError: No standard torus is known for the algebra.
    """
    return cartan_from_torus(algebra, STANDARD_TORI[str(algebra.name)])


def check_roots(algebra: LieAlgebra, cartan: CartanData) -> bool:
    """Verify ``[t_j, X_α] = α(t_j) X_α`` exactly for every stored root."""
    for root in cartan.roots:
        for t, value in zip(cartan.torus, root.values):
            image = _gaussian_apply(algebra.ad_matrix(t), root.vector)
            expected = [
                GaussianRational.from_domain(value.to_domain() * x.to_domain())
                for x in root.vector
            ]
            if image != expected:
                return False
    return True
