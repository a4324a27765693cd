"""Per-invocation dependencies of the CLI commands."""

import typer

from balanced_episturmian.config import get_settings
from balanced_episturmian.episturmian.directive import parse_spec
from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import (
    CliConfig,
    DirectiveSpec,
    EnumerationConfig,
    TailMode,
)
from balanced_episturmian.services.verification import VerificationService


def get_cli_config(ctx: typer.Context) -> CliConfig:
    """Config stored by the app callback, or one built from settings alone."""
    config = ctx.find_object(CliConfig)
    if config is not None:
        return config
    settings = get_settings()
    return CliConfig(
        output_format=settings.output_format,
        prefix_bound=settings.prefix_bound,
        word_cap=settings.word_cap,
        witness_min_prefix=settings.witness_min_prefix,
    )


def get_enumeration_config(
    config: CliConfig,
    max_alphabet: int | None,
    max_head_len: int | None,
    max_tail_len: int | None,
    tail_mode: TailMode,
) -> EnumerationConfig:
    """Enumeration bounds: explicit options over settings defaults."""
    settings = get_settings()
    return EnumerationConfig(
        max_alphabet=max_alphabet or settings.max_alphabet,
        max_head_len=settings.max_head_len if max_head_len is None else max_head_len,
        max_tail_len=max_tail_len or settings.max_tail_len,
        prefix_bound=config.prefix_bound,
        tail_mode=tail_mode,
    )


def get_verification_service(
    config: CliConfig, workers: int | None = None
) -> VerificationService:
    return VerificationService(
        bounds=config.bounds, workers=workers or get_settings().verify_workers
    )


def parse_infinite_spec(text: str) -> DirectiveSpec:
    """Directive spec with a nonempty tail."""
    spec = parse_spec(text)
    if spec.is_finite:
        raise InputValidationError(
            f"{text!r} is a finite directive word; write the periodic tail in "
            "parentheses, e.g. 123(1)"
        )
    return spec
