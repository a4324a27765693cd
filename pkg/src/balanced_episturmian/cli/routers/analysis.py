"""Analysis commands: balance, frequencies, complexity and special factors."""

from enum import StrEnum
from typing import Annotated

import typer

from balanced_episturmian.cli.dependencies import get_cli_config, parse_infinite_spec
from balanced_episturmian.cli.errors import handle_business_errors
from balanced_episturmian.cli.rendering import (
    complexity_table,
    emit,
    render_balance,
    render_fraction,
    render_frequencies,
)
from balanced_episturmian.cli.schemas import FrequencyResponse, SpecialFactorsResponse
from balanced_episturmian.episturmian.directive import generate_prefix, to_periodic
from balanced_episturmian.episturmian.families import frequencies_closed_form
from balanced_episturmian.episturmian.search import balance_of_spec
from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import CliConfig, EventuallyPeriodicWord
from balanced_episturmian.words.balance import (
    balance_check_finite,
    balance_check_periodic,
)
from balanced_episturmian.words.factors import (
    FactorFamily,
    complexity,
    factor_family_of_word,
    left_special_factors,
    right_special_factors,
)
from balanced_episturmian.words.periodic import factor_family, frequencies
from balanced_episturmian.words.text import parse_bracketed, render_word

router = typer.Typer()


class Side(StrEnum):
    LEFT = "left"
    RIGHT = "right"


def _factor_family(
    source: str, max_n: int, config: CliConfig
) -> tuple[FactorFamily, bool]:
    """Factor sets of a finite word, or of the word generated by a directive spec.

    Exact for finite words and single-letter tails; read off a prefix of
    ``prefix_bound`` letters otherwise.
    """
    head, tail = parse_bracketed(source)
    if tail is None:
        return factor_family_of_word(head, max_n), True
    spec = parse_infinite_spec(source)
    if len(spec.tail) == 1:
        word = to_periodic(spec, config.word_cap)
        return factor_family(word, max_n, config.word_cap), True
    prefix = generate_prefix(spec, config.prefix_bound, config.word_cap)
    return factor_family_of_word(prefix[: config.prefix_bound], max_n), False


@router.command("balance")
@handle_business_errors
def balance_command(
    ctx: typer.Context,
    source: Annotated[
        str,
        typer.Argument(help="Finite word 1213, periodic word PRE(PERIOD), or a spec"),
    ],
    max_len: Annotated[
        int | None,
        typer.Option(help="Largest factor length checked in a finite word"),
    ] = None,
    directive: Annotated[
        bool,
        typer.Option(help="Read SOURCE as a directive spec HEAD(TAIL)"),
    ] = False,
) -> None:
    """Decide balance, printing a witness when the word is unbalanced."""
    config = get_cli_config(ctx)
    if directive:
        report = balance_of_spec(
            parse_infinite_spec(source),
            config.prefix_bound,
            config.witness_min_prefix,
            config.word_cap,
        )
    else:
        head, tail = parse_bracketed(source)
        if tail is None:
            report = balance_check_finite(head, len(head) if max_len is None else max_len)
        elif not tail:
            raise InputValidationError(f"{source!r} has an empty period")
        else:
            word = EventuallyPeriodicWord(preperiod=head, period=tail)
            report = balance_check_periodic(word, config.word_cap)
    emit(config, report, render_balance(report))


@router.command("freq")
@handle_business_errors
def freq_command(
    ctx: typer.Context,
    source: Annotated[
        str, typer.Argument(help="k for [Pal(12…k)]^ω, or a spec HEAD(α)")
    ],
) -> None:
    """Print exact letter frequencies, sorted by letter."""
    config = get_cli_config(ctx)
    if source.isdigit():
        values = frequencies_closed_form(int(source))
    else:
        spec = parse_infinite_spec(source)
        values = frequencies(to_periodic(spec, config.word_cap))
    payload = FrequencyResponse(
        source=source,
        frequencies={
            letter: render_fraction(value) for letter, value in values.items()
        },
    )
    emit(config, payload, render_frequencies(values))


@router.command("complexity")
@handle_business_errors
def complexity_command(
    ctx: typer.Context,
    source: Annotated[str, typer.Argument(help="Finite word or spec HEAD(TAIL)")],
    max_n: Annotated[int, typer.Option(help="Largest factor length")] = 10,
) -> None:
    """Print the factor complexity p(n) for n = 1..max-n."""
    config = get_cli_config(ctx)
    if max_n < 1:
        raise InputValidationError(f"--max-n must be positive, got {max_n}")
    factors, exact = _factor_family(source, max_n, config)
    profile = complexity(factors, max_n, exact)
    emit(config, profile, complexity_table(profile, source))


@router.command("special")
@handle_business_errors
def special_command(
    ctx: typer.Context,
    source: Annotated[str, typer.Argument(help="Finite word or spec HEAD(TAIL)")],
    n: Annotated[int, typer.Option("--n", help="Factor length")] = 1,
    side: Annotated[Side, typer.Option(help="Extension side")] = Side.RIGHT,
) -> None:
    """Print the left or right special factors of length n."""
    config = get_cli_config(ctx)
    if n < 0:
        raise InputValidationError(f"--n must not be negative, got {n}")
    factors, exact = _factor_family(source, n + 1, config)
    specials = (
        left_special_factors(factors, n)
        if side == Side.LEFT
        else right_special_factors(factors, n)
    )
    rendered = sorted(render_word(f) for f in specials)
    payload = SpecialFactorsResponse(
        source=source, side=side.value, n=n, factors=rendered, exact=exact
    )
    emit(config, payload, "\n".join(rendered) if rendered else "(none)")
