"""Call stack introspection, used to name regression snapshots."""

import inspect
import os
from typing import NamedTuple


class FunctionInfo(NamedTuple):
    """
    Where a function on the call stack is defined.

    See :func:`get_function_info()`
    """

    module_name: str
    function_name: str
    dir_name: str

    @property
    def short_module_name(self) -> str:
        """Last component of the dotted module name."""
        return self.module_name.rsplit('.', 1)[-1]


def get_function_info(depth: int = 1) -> FunctionInfo:
    """
    Get information about a function on the call stack.

    :param depth: How much up the stack to look. 1 for the caller.

    :returns: Module name, function name and directory of the module's file.

    :raises AssertionError: The stack is not that deep.
    """
    frame = inspect.currentframe()
    assert frame is not None, "Not supported on certain python implementations"

    for _ in range(depth):
        frame = frame.f_back
        assert frame is not None, f"Call stack is shallower than {depth}"
    # endfor

    return FunctionInfo(
        frame.f_globals['__name__'],
        frame.f_code.co_name,
        os.path.dirname(inspect.getfile(frame)),
    )
