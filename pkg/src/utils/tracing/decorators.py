"""
Decorators for adding tracing to functions.
"""

import functools
from collections.abc import Callable
from typing import Any, TypeVar

from .context import trace_operation

F = TypeVar("F", bound=Callable[..., Any])


def trace_function(operation_name: str | None = None, **default_attributes: Any) -> Callable[[F], F]:
    """
    Decorator for tracing function calls.

    Args:
        operation_name: Optional custom operation name (defaults to module.function)
        **default_attributes: Default attributes to add to all spans

    Example:
        >>> @trace_function(component="bounds")
        ... def optimize_K(...):
        ...     ...
    """
    def decorator(func: F) -> F:
        name = operation_name or f"{func.__module__}.{func.__name__}"

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            attributes = dict(default_attributes)
            attributes["function"] = func.__name__

            with trace_operation(name, **attributes):
                return func(*args, **kwargs)

        return wrapper  # type: ignore[return-value]
    return decorator
