"""Verification commands."""

from typing import Annotated

import typer
from rich.console import Group, RenderableType

from balanced_episturmian.cli.dependencies import (
    get_cli_config,
    get_enumeration_config,
    get_verification_service,
)
from balanced_episturmian.cli.errors import handle_business_errors
from balanced_episturmian.cli.rendering import (
    discrepancy_table,
    emit,
    verification_table,
)
from balanced_episturmian.cli.schemas import ClaimCatalogue, ClaimInfo
from balanced_episturmian.models import TailMode
from balanced_episturmian.services.claims import CLAIM_IDS, claim_statement

router = typer.Typer()


@router.command("verify")
@handle_business_errors
def verify_command(
    ctx: typer.Context,
    claim: Annotated[str, typer.Argument(help="Claim id; see the claims command")],
    max_alphabet: Annotated[int | None, typer.Option(help="Alphabet bound")] = None,
    max_head_len: Annotated[int | None, typer.Option(help="Head length bound")] = None,
    max_tail_len: Annotated[
        int | None, typer.Option(help="Tail period length bound")
    ] = None,
    tail_mode: Annotated[
        TailMode, typer.Option(help="single-letter tails only, or periodic tails")
    ] = TailMode.PERIODIC,
    k_min: Annotated[int, typer.Option(help="Smallest k for the fraenkel claim")] = 3,
    k_max: Annotated[int, typer.Option(help="Largest k for the fraenkel claim")] = 5,
    workers: Annotated[int | None, typer.Option(help="Worker processes")] = None,
) -> None:
    """Check a claim over an exhaustive enumeration; exits 0 iff nothing disagrees."""
    config = get_cli_config(ctx)
    cfg = get_enumeration_config(
        config, max_alphabet, max_head_len, max_tail_len, tail_mode
    )
    service = get_verification_service(config, workers)
    report = service.verify(claim, cfg, range(k_min, k_max + 1))

    renderables: list[RenderableType] = [verification_table(report)]
    if report.disagreements:
        renderables.append(discrepancy_table(report))
    if report.unknown_specs:
        renderables.append("Unknown: " + ", ".join(report.unknown_specs))
    emit(config, report, Group(*renderables))
    raise typer.Exit(0 if report.passed else 1)


@router.command("claims")
@handle_business_errors
def claims_command(ctx: typer.Context) -> None:
    """List the claim ids accepted by verify."""
    config = get_cli_config(ctx)
    catalogue = ClaimCatalogue(
        claims=[
            ClaimInfo(claim=claim, statement=claim_statement(claim))
            for claim in CLAIM_IDS
        ]
    )
    text = "\n".join(f"{info.claim}: {info.statement}" for info in catalogue.claims)
    emit(config, catalogue, text)
