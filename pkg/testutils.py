"""
Helpers shared by the test modules.

Random data is always drawn from an explicit :class:`random.Random`, so that a test
parametrized over seeds names the seed of every failure.
"""

from fractions import Fraction
import logging
import random
from typing import (
    Any,
    Callable,
    Collection,
    Hashable,
    Iterable,
    List,
    Optional,
    Set,
    Union,
)

from .jetlie import FormalDiffeo, GaugeTransform, JetElement
from .liealg import LieAlgebra
from .linalg import Matrix
from .ring import FormalVectorField, TruncSeries, monomials

_logger = logging.getLogger(__name__)


DEFAULT_SEEDS = (0, 1, 2)
"""Seeds used by the randomized property tests."""

FIELD_SEEDS = tuple(range(50))
"""Seeds of the randomized Poincaré-Dulac suite."""

RECOVERY_SEEDS = tuple(range(25))
"""Seeds of the scramble-and-recover suites, per algebra."""

PROPERTY_SEEDS = tuple(range(100))
"""Seeds of the exactness suites for gauges, BCH and jet projections."""


def eq_operator(one: object, another: object) -> bool:
    """`==` as a function, the default comparison of :func:`equal_set`."""
    return one == another


def equal_set(
    one_set: Collection[object],
    another_set: Collection[object],
    equals: Callable[[object, object], bool] = eq_operator,
) -> bool:
    """
    Compare two collections as multisets, also for unhashable elements.

    :param equals: Comparison of elements.

    :returns: `True` if each element of `one_set` can be paired with a distinct equal
      element of `another_set` and nothing is left over.
    """
    if len(one_set) != len(another_set):
        return False

    remaining = list(another_set)
    for each_one in one_set:
        for index, each_another in enumerate(remaining):
            if equals(each_one, each_another):
                del remaining[index]
                break
        else:
            _logger.info("No counterpart for %r", each_one)
            return False
    # endfor

    return len(remaining) == 0


def combine_lists(
    *args: Union[object, Iterable[object]], raise_if_empty: bool = True
) -> list[object]:
    r"""
    Cartesian product of test parameters, flattened into one list per combination.

    Non-list arguments count as one-element lists. List elements are concatenated;
    other elements are wrapped into a list first.

      >>> to_set( combine_lists([1, 2], ['mode']) ) == \
      ...  to_set( [[1, 'mode'], [2, 'mode']] )
      True
      >>> combine_lists([[1, 'a']], [2, 3])
      [[1, 'a', 2], [1, 'a', 3]]

    :param \*args: Parameter lists.
    :param raise_if_empty: Whether an empty result is an error.

    :return: List of combinations.

    :raises AssertionError: The result is empty and `raise_if_empty` is `True`.
    """
    assert len(args) >= 1

    first = args[0] if isinstance(args[0], list) else [args[0]]
    if len(args) == 1:
        result = list(first)

    else:
        rest = combine_lists(*args[1:], raise_if_empty=raise_if_empty)
        result = []
        for another in rest:
            tail = another if isinstance(another, list) else [another]
            for one in first:
                head = list(one) if isinstance(one, list) else [one]
                result.append(head + tail)
        # endfor

    if raise_if_empty and len(result) == 0:
        raise AssertionError("Empty result")

    return result


def to_set(iterable: Iterable[Any]) -> Set[Hashable]:
    """
    Convert to a set, turning unhashable elements into tuples.

    Convenient for comparing parameter lists irrespective of order.
    """
    result: Set[Hashable] = set()
    for each in iterable:
        result.add(each if isinstance(each, Hashable) else tuple(each))
    return result


# Random data ###


def random_fraction(
    rng: random.Random, bound: int = 3, denominators: Iterable[int] = (1, 2, 3)
) -> Fraction:
    """Fraction ``a/b`` with ``|a| <= bound`` and ``b`` from `denominators`."""
    return Fraction(rng.randint(-bound, bound), rng.choice(list(denominators)))


def random_matrix(
    rng: random.Random, nrows: int, ncols: Optional[int] = None, bound: int = 3
) -> Matrix:
    """Matrix with entries from :func:`random_fraction`."""
    ncols = nrows if ncols is None else ncols
    return [[random_fraction(rng, bound) for _ in range(ncols)] for _ in range(nrows)]


def random_series(
    rng: random.Random,
    dim: int,
    order: int,
    *,
    low: int = 0,
    density: float = 0.5,
) -> TruncSeries:
    """
    Series with coefficients in degrees ``low..order``.

    :param density: Probability that a monomial gets a (possibly zero) coefficient.
    """
    coefficients = {
        exponent: random_fraction(rng)
        for exponent in monomials(dim, order, low)
        if rng.random() < density
    }
    return TruncSeries(dim, order, coefficients)


def random_jet_element(
    rng: random.Random, algebra: LieAlgebra, dim: int, order: int, *, low: int = 1
) -> JetElement:
    """``k``-valued series without terms below degree `low`."""
    return JetElement(
        algebra, [random_series(rng, dim, order, low=low) for _ in range(algebra.dim)]
    )


def random_field(
    rng: random.Random, dim: int, order: int, *, low: int = 1
) -> FormalVectorField:
    """Vector field vanishing at the origin, with terms from degree `low` on."""
    assert low >= 1, "Formal vector fields must vanish at the origin"
    return FormalVectorField(
        [random_series(rng, dim, order, low=low) for _ in range(dim)]
    )


def random_gauge(
    rng: random.Random, algebra: LieAlgebra, dim: int, order: int
) -> GaugeTransform:
    """Gauge transformation with log coordinate in ``I ⊗ k``."""
    return GaugeTransform(random_jet_element(rng, algebra, dim, order, low=1))


def random_diffeo(rng: random.Random, dim: int, order: int) -> FormalDiffeo:
    """Formal diffeomorphism ``x ↦ x + φ(x)`` with ``φ`` of degree ``>= 2``."""
    identity = FormalDiffeo.identity(dim, order)
    correction = random_field(rng, dim, order, low=2)
    return FormalDiffeo(
        [x + c for x, c in zip(identity.components, correction.components)]
    )


def rows(*entries: Iterable[Union[int, str, Fraction]]) -> List[List[Fraction]]:
    """
    Matrix from rows of integers or ``"p/q"`` strings.

    >>> rows([1, '1/2'], [0, -1])
    [[Fraction(1, 1), Fraction(1, 2)], [Fraction(0, 1), Fraction(-1, 1)]]
    """
    return [[Fraction(x) for x in row] for row in entries]
