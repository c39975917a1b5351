"""
Declares convenient decorators.

.. note:: Cannot decorate fixtures or test functions directly in py.test.
  Arguments(=fixtures) don't get passed in. Please define another function to
  be called from the function of interest.
"""

from functools import wraps
import logging
import time
from typing import (
    Any,
    Callable,
    TypeVar,
    cast,
)

TargetFunctionT = TypeVar('TargetFunctionT', bound=Callable[..., Any])

# Frame of the caller of the decorated function, seen from the wrapper.
_STACK_LEVEL = 2


def function_decorator(target: TargetFunctionT) -> TargetFunctionT:
    """
    Decorate a decorator that decorates functions.

    Does nothing, just annotates.
    """
    return target


@function_decorator
def log_calls(
    logger: logging.Logger, *, log_result: bool = True, level: int = logging.DEBUG
) -> Callable[[TargetFunctionT], TargetFunctionT]:
    """
    Log calls to the decorated function, with the time they took.

    Records are attributed to the caller of the decorated function.

    :param logger: object to log to
    :param log_result: `False` to leave the returned value out of the log; results
      of normalizations can be large.
    :param level: Log level of the records.
    """

    def decorator(target: TargetFunctionT) -> TargetFunctionT:
        @wraps(target)
        def log_function(*args: Any, **kwargs: Any) -> Any:  # noqa: ANN401
            if not logger.isEnabledFor(level):
                return target(*args, **kwargs)

            logger.log(
                level,
                f"{target.__name__} args: {args!r} {kwargs!r}",
                stacklevel=_STACK_LEVEL,
            )

            start = time.perf_counter()
            result = target(*args, **kwargs)
            elapsed = time.perf_counter() - start

            if log_result:
                logger.log(
                    level,
                    f"{target.__name__} result ({elapsed:.3f}s): {result!r}",
                    stacklevel=_STACK_LEVEL,
                )

            else:
                logger.log(
                    level,
                    f"{target.__name__} done ({elapsed:.3f}s)",
                    stacklevel=_STACK_LEVEL,
                )

            return result

        return cast(TargetFunctionT, log_function)

    return decorator


@function_decorator
def log_calls_on_exception(
    logger: logging.Logger, *, log_exception: bool = True
) -> Callable[[TargetFunctionT], TargetFunctionT]:
    """
    Log calls to the decorated function, when exceptions are raised.

    The exception is re-raised.

    :param logger: object to log to
    :param log_exception: True, to log stacktrace and exception
    """

    def decorator(target: TargetFunctionT) -> TargetFunctionT:
        @wraps(target)
        def log_function(*args: Any, **kwargs: Any) -> Any:  # noqa: ANN401
            try:
                return target(*args, **kwargs)

            except BaseException:
                if log_exception:
                    logger.exception(
                        f"Exception in {target.__name__}", stacklevel=_STACK_LEVEL
                    )

                else:
                    logger.error(
                        f"{target.__name__} args: {args!r} {kwargs!r}",
                        stacklevel=_STACK_LEVEL,
                    )

                raise

        return cast(TargetFunctionT, log_function)

    return decorator
