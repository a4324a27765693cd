"""Typer application factory using composition pattern."""

import logging
import sys
from typing import Annotated

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from balanced_episturmian import __version__
from balanced_episturmian.cli.errors import (
    handle_business_errors,
    report_business_error,
)
from balanced_episturmian.config import LogLevel, OutputFormat, get_settings
from balanced_episturmian.exceptions import BusinessError, InputValidationError
from balanced_episturmian.models import CliConfig


def configure_logging(level: LogLevel) -> None:
    """Route all log records to stderr through rich, keeping stdout for results."""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _print_version(value: bool) -> None:
    if value:
        typer.echo(f"{get_settings().app_name} {__version__}")
        raise typer.Exit()


def create_app() -> typer.Typer:
    """
    Application factory using composition pattern.

    Creates and configures the Typer application with:
    - Global options stored as a CliConfig on the context
    - Logging configuration
    - Command routers
    """
    settings = get_settings()

    app = typer.Typer(
        name="balanced-episturmian",
        help=f"{settings.app_name}: construct, classify and verify standard "
        "episturmian words.",
        context_settings={"help_option_names": ["-h", "--help"]},
        no_args_is_help=True,
        add_completion=False,
    )

    @app.callback()
    @handle_business_errors
    def configure(
        ctx: typer.Context,
        output_format: Annotated[
            OutputFormat, typer.Option("--format", help="Output format")
        ] = settings.output_format,
        prefix_bound: Annotated[
            int | None, typer.Option(help="Witness-search prefix bound")
        ] = None,
        word_cap: Annotated[int | None, typer.Option(help="Word-size guard")] = None,
        log_level: Annotated[
            LogLevel | None, typer.Option(help="Log level on stderr")
        ] = None,
        _version: Annotated[
            bool,
            typer.Option(
                "--version", callback=_print_version, is_eager=True, help="Show version"
            ),
        ] = False,
    ) -> None:
        configure_logging(log_level or settings.log_level)
        cap = settings.word_cap if word_cap is None else word_cap
        if cap > settings.hard_word_cap:
            raise InputValidationError(
                f"--word-cap {cap:,} exceeds the hard cap of {settings.hard_word_cap:,}"
            )
        try:
            ctx.obj = CliConfig(
                output_format=output_format,
                prefix_bound=settings.prefix_bound if prefix_bound is None else prefix_bound,
                word_cap=cap,
                witness_min_prefix=settings.witness_min_prefix,
            )
        except ValidationError as e:
            message = "; ".join(error["msg"] for error in e.errors())
            raise InputValidationError(f"Invalid global options: {message}") from e

    # Register command routers
    # (Lazy router import inside the function to avoid circular imports and
    # reduce startup time if the factory isn't called)
    from balanced_episturmian.cli.routers import (
        analysis_router,
        classification_router,
        construction_router,
        verification_router,
    )

    for router in (
        construction_router,
        analysis_router,
        classification_router,
        verification_router,
    ):
        app.add_typer(router)

    return app


def main() -> None:
    """Entry point for the command-line tool."""
    try:
        app = create_app()
    except BusinessError as exc:
        report_business_error(exc, OutputFormat.TEXT)
        sys.exit(exc.exit_code)
    app()
