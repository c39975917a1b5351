"""Registries mapping names to callables."""

from types import NoneType
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    List,
    Optional,
    TypeVar,
    Union,
    overload,
)

from .decorators import function_decorator

_TargetSignature = TypeVar('_TargetSignature')


class FunctionRegistryFactory(Generic[_TargetSignature]):
    """
    A factory that returns functions based on strings assigned.

    The functions are registered using `@registry.register`, where `registry` is an
    instance of `FunctionRegistryFactory`. Named Lie algebras and the CLI pipelines
    are kept in one each.

    The parameter `_TargetSignature` specifies the signature of functions to be
    registered.

    :param kind: What is registered, for error messages.
    """

    def __init__(self, kind: str = 'function') -> None:
        self._kind = kind
        self._registry: Dict[str, Any] = {}

    @overload
    def register(  # type: ignore[overload-overlap]
        self, argument: Optional[str] = None
    ) -> Callable[[_TargetSignature], _TargetSignature]: ...

    @overload
    def register(self, argument: _TargetSignature) -> _TargetSignature: ...

    @function_decorator
    def register(
        self, argument: Union[None, str, _TargetSignature] = None
    ) -> Union[Callable[[_TargetSignature], _TargetSignature], _TargetSignature]:
        """
        Decorate function to register.

        :param argument: Name for the callable that is to be specified for creation.
          If omitted, the name of the function will be used.

        Parentheses for this decorator can be omitted.

        :raises AssertionError: The name is already registered.
        """

        def _wrapper(target: _TargetSignature) -> _TargetSignature:
            key_name = (
                target.__name__  # type: ignore[attr-defined]
                if name is None
                else name
            )
            assert key_name not in self._registry, (
                f"Name ({key_name}) already registered."
            )
            self._registry[key_name] = target
            return target

        if isinstance(argument, (str, NoneType)):
            name = argument
            return _wrapper

        name = None
        return _wrapper(argument)

    def create(self, name: str) -> _TargetSignature:
        """
        Return callable registered to this registry.

        :param name: Name for the callable specified with `register()`.
        :raises KeyError: `name` doesn't exist; the message lists the known names.
        """
        try:
            target: _TargetSignature = self._registry[name]

        except KeyError:
            raise KeyError(
                f"Unknown {self._kind} '{name}'; known: {', '.join(self.names())}"
            ) from None

        return target

    def names(self) -> List[str]:
        """Registered names, sorted."""
        return sorted(self._registry)

    def __contains__(self, name: object) -> bool:
        return name in self._registry
