"""Business error handling for CLI commands."""

from collections.abc import Callable
from functools import wraps
from typing import Any

import typer
from pydantic_core import to_json

from balanced_episturmian.config import OutputFormat
from balanced_episturmian.exceptions import BusinessError
from balanced_episturmian.models import CliConfig


def _output_format(kwargs: dict[str, Any]) -> OutputFormat:
    ctx = kwargs.get("ctx")
    if isinstance(ctx, typer.Context) and isinstance(ctx.obj, CliConfig):
        return ctx.obj.output_format
    requested = kwargs.get("output_format")
    if isinstance(requested, OutputFormat):
        return requested
    return OutputFormat.TEXT


def report_business_error(exc: BusinessError, output_format: OutputFormat) -> None:
    """Print an application-specific error to stderr."""
    if output_format == OutputFormat.JSON:
        payload = {"detail": exc.message, "error_code": exc.error_code}
        typer.echo(to_json(payload).decode(), err=True)
    else:
        typer.echo(f"error[{exc.error_code}]: {exc.message}", err=True)


def handle_business_errors[**P, R](func: Callable[P, R]) -> Callable[P, R]:
    """Turn a ``BusinessError`` raised by a command into its exit code."""

    @wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        try:
            return func(*args, **kwargs)
        except BusinessError as exc:
            report_business_error(exc, _output_format(kwargs))
            raise typer.Exit(exc.exit_code) from exc

    return wrapper
