"""Classification command."""

from typing import Annotated

import typer

from balanced_episturmian.cli.dependencies import get_cli_config
from balanced_episturmian.cli.errors import handle_business_errors
from balanced_episturmian.cli.rendering import emit
from balanced_episturmian.episturmian.directive import parse_spec
from balanced_episturmian.episturmian.families import classify
from balanced_episturmian.models import FamilyClass, FamilyVariant

router = typer.Typer()

EXIT_BALANCED = 0
EXIT_NOT_BALANCED = 1
EXIT_UNKNOWN = 2


def classification_exit_code(family: FamilyClass) -> int:
    match family.variant:
        case FamilyVariant.NOT_BALANCED:
            return EXIT_NOT_BALANCED
        case FamilyVariant.UNKNOWN:
            return EXIT_UNKNOWN
        case _:
            return EXIT_BALANCED


@router.command("classify")
@handle_business_errors
def classify_command(
    ctx: typer.Context,
    spec: Annotated[str, typer.Argument(help="Directive spec HEAD(TAIL), e.g. 112(3)")],
) -> None:
    """Place a directive spec in family a, b or c, or show a witness.

    Exits 0 for a family (or a balanced word outside the classified
    alphabets), 1 when not balanced and 2 when no verdict was reached.
    """
    config = get_cli_config(ctx)
    family = classify(
        parse_spec(spec),
        config.prefix_bound,
        config.witness_min_prefix,
        config.word_cap,
    )
    emit(config, family, str(family))
    raise typer.Exit(classification_exit_code(family))
