"""Exceptions raised by jetnorm operations."""

from typing import (
    Optional,
    Sequence,
    Tuple,
)


class JetnormError(Exception):
    """Base class of all errors reported by this package."""


class MismatchError(JetnormError, ValueError):
    """Operands disagree in dimension, truncation order or Lie algebra."""


class AffineFieldError(JetnormError, ValueError):
    """A formal vector field has a non-zero constant term."""


class NotInvertibleError(JetnormError, ValueError):
    """A formal diffeomorphism has a singular linear part."""


class NotNilpotentError(JetnormError, ValueError):
    """A log coordinate has a non-zero constant term."""


class NotClosedError(JetnormError):
    """A cochain that must be closed is not."""


class PreconditionError(JetnormError):
    """An operation was called on data violating its documented precondition."""


class NotSemisimpleError(JetnormError):
    """A Lie algebra or an operator that must be semisimple is not."""


class ResonanceError(JetnormError):
    """A homological operator fails to be invertible at some degree."""

    def __init__(self, message: str, *, degree: int) -> None:
        super().__init__(message)
        self.degree = degree


class InexactSpectrumError(JetnormError):
    """Exact eigenvalues were requested but are not Gaussian rationals."""


class MixedSpectrumError(JetnormError):
    """An irreducible factor has roots both on and off the imaginary axis."""


class SymmetryError(JetnormError):
    """A bilinear form that must be symmetric is not."""

    def __init__(self, message: str, *, witness: Tuple[int, int]) -> None:
        super().__init__(message)
        self.witness = witness


class IndefiniteFormError(JetnormError):
    """A quadratic form that must be positive semidefinite is not."""


class RepresentationError(JetnormError):
    """A matrix representation violates the bracket relations."""

    def __init__(self, message: str, *, defect: Optional[float] = None) -> None:
        super().__init__(message)
        self.defect = defect


class NumericalRankError(JetnormError):
    """A floating point computation is too ill conditioned to be trusted."""


class SchemaError(JetnormError):
    """
    A problem file does not follow the expected layout.

    :param path: JSON path of the offending field, e.g. ``$.action.fields[0]``.
    :param line: Line of a JSON syntax error, if any.
    :param column: Column of a JSON syntax error, if any.
    """

    def __init__(
        self,
        message: str,
        *,
        path: str = '$',
        line: Optional[int] = None,
        column: Optional[int] = None,
    ) -> None:
        location = path if line is None else f"line {line}, column {column}"
        super().__init__(f"{location}: {message}")
        self.path = path
        self.line = line
        self.column = column


def join_path(path: str, keys: Sequence[object]) -> str:
    """
    Extend a JSON path with object keys and list indices.

    >>> join_path('$', ['action', 'fields', 0])
    '$.action.fields[0]'
    """
    for key in keys:
        path += f'[{key}]' if isinstance(key, int) else f'.{key}'

    return path
