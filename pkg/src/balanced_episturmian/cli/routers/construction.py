"""Word construction commands: Pal, prefixes of standard episturmian words, Fraenkel words."""

from typing import Annotated

import typer

from balanced_episturmian.cli.dependencies import get_cli_config
from balanced_episturmian.cli.errors import handle_business_errors
from balanced_episturmian.cli.rendering import emit
from balanced_episturmian.cli.schemas import WordResponse
from balanced_episturmian.episturmian.directive import generate_prefix, parse_spec
from balanced_episturmian.episturmian.families import fraenkel_word
from balanced_episturmian.episturmian.pal import pal
from balanced_episturmian.words.basic import Word
from balanced_episturmian.words.text import parse_word, render_word

router = typer.Typer()


def _emit_word(ctx: typer.Context, source: str, word: Word) -> None:
    rendered = render_word(word)
    emit(
        get_cli_config(ctx),
        WordResponse(source=source, word=rendered, length=len(word)),
        rendered,
    )


@router.command("pal")
@handle_business_errors
def pal_command(
    ctx: typer.Context,
    word: Annotated[str, typer.Argument(help="Directive word, e.g. 123")],
) -> None:
    """Print the iterated palindromic closure Pal(w)."""
    config = get_cli_config(ctx)
    _emit_word(ctx, word, pal(parse_word(word), config.word_cap))


@router.command("generate")
@handle_business_errors
def generate_command(
    ctx: typer.Context,
    spec: Annotated[str, typer.Argument(help="Directive spec HEAD(TAIL), e.g. (123)")],
    length: Annotated[int, typer.Option("--length", "-n", help="Minimum length")],
    exact: Annotated[
        bool, typer.Option(help="Truncate to exactly --length letters")
    ] = False,
) -> None:
    """Print the first palindromic prefix of Pal(Δ) with at least --length letters."""
    config = get_cli_config(ctx)
    prefix = generate_prefix(parse_spec(spec), length, config.word_cap)
    _emit_word(ctx, spec, prefix[:length] if exact else prefix)


@router.command("fraenkel")
@handle_business_errors
def fraenkel_command(
    ctx: typer.Context,
    k: Annotated[int, typer.Argument(help="Number of letters")],
) -> None:
    """Print the Fraenkel word Fr_k = Pal(12…k)."""
    config = get_cli_config(ctx)
    _emit_word(ctx, str(k), fraenkel_word(k, config.word_cap))
