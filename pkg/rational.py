"""
Exact scalars.

Rationals are :class:`fractions.Fraction` in the public API and are converted to
sympy's ``QQ``/``QQ_I`` domain elements for linear algebra. Their text form is the
decimal free ``"p/q"`` (or ``"p"``) string.
"""

from fractions import Fraction
import math
import re
from typing import (
    Any,
    Dict,
    NamedTuple,
    Union,
)

from sympy import QQ, QQ_I

Rational = Union[Fraction, int, str]
"""Anything :func:`to_fraction` accepts."""

_RATIONAL_PATTERN = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')


def to_fraction(value: Rational) -> Fraction:
    """
    Convert to an exact rational.

    >>> to_fraction('-3/6')
    Fraction(-1, 2)
    >>> to_fraction(4)
    Fraction(4, 1)

    :param value: `Fraction`, `int` or a ``"p/q"`` string.

    :returns: The value as `Fraction`.

    :raises ValueError: `value` is a float, a decimal string or malformed.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")

    if isinstance(value, Fraction):
        return value

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, str):
        if not _RATIONAL_PATTERN.match(value):
            raise ValueError(f"Not a rational of the form 'p/q': {value!r}")

        try:
            return Fraction(value.replace(' ', ''))

        except ZeroDivisionError as error:
            raise ValueError(f"Zero denominator: {value!r}") from error

    raise ValueError(f"Not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    """
    Format as ``"p/q"``, or ``"p"`` for integers.

    >>> format_fraction(Fraction(6, -4))
    '-3/2'
    """
    return str(value)


def to_domain(value: Fraction) -> Any:  # noqa: ANN401
    """Convert to an element of sympy's ``QQ``."""
    return QQ(value.numerator, value.denominator)


def from_domain(value: Any) -> Fraction:  # noqa: ANN401
    """Convert an element of sympy's ``QQ`` (or ``ZZ``) to `Fraction`."""
    return Fraction(int(value.numerator), int(value.denominator))


class GaussianRational(NamedTuple):
    """Element ``re + i·im`` of ℚ(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re_part: Rational, im_part: Rational = 0) -> 'GaussianRational':
        """Create from anything :func:`to_fraction` accepts."""
        return cls(to_fraction(re_part), to_fraction(im_part))

    @classmethod
    def from_domain(cls, value: Any) -> 'GaussianRational':  # noqa: ANN401
        """Convert an element of sympy's ``QQ_I``."""
        return cls(from_domain(value.x), from_domain(value.y))

    def to_domain(self) -> Any:  # noqa: ANN401
        """Convert to an element of sympy's ``QQ_I``."""
        return QQ_I(to_domain(self.re), to_domain(self.im))

    def to_complex(self) -> complex:
        """Convert to floating point."""
        return complex(float(self.re), float(self.im))

    def is_zero(self) -> bool:
        """Return `True` for ``0``."""
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        """Return `True` if the imaginary part vanishes."""
        return self.im == 0

    def is_imaginary(self) -> bool:
        """Return `True` if the real part vanishes (``0`` included)."""
        return self.re == 0

    def conjugate(self) -> 'GaussianRational':
        """Complex conjugate."""
        return GaussianRational(self.re, -self.im)

    def to_json(self) -> Dict[str, str]:
        """Encode as ``{"re": "p/q", "im": "r/s"}``."""
        return {'re': format_fraction(self.re), 'im': format_fraction(self.im)}

    @classmethod
    def from_json(cls, value: Dict[str, str]) -> 'GaussianRational':
        """Decode the output of :meth:`to_json`."""
        return cls.of(value['re'], value['im'])

    def __str__(self) -> str:
        if self.im == 0:
            return format_fraction(self.re)

        if self.re == 0:
            return f'{format_fraction(self.im)}i'

        sign = '+' if self.im > 0 else '-'
        return f'{format_fraction(self.re)}{sign}{format_fraction(abs(self.im))}i'


def is_rational_square(value: Fraction) -> bool:
    """
    Check whether `value` is the square of a rational.

    >>> is_rational_square(Fraction(9, 4)), is_rational_square(Fraction(2))
    (True, False)
    """
    if value < 0:
        return False

    return all(_is_square(each) for each in (value.numerator, value.denominator))


def rational_sqrt(value: Fraction) -> Fraction:
    """Square root of a rational square."""
    assert is_rational_square(value), f"{value} is not a rational square"
    return Fraction(_isqrt(value.numerator), _isqrt(value.denominator))


def _isqrt(value: int) -> int:
    return math.isqrt(value)


def _is_square(value: int) -> bool:
    return value >= 0 and _isqrt(value) ** 2 == value
