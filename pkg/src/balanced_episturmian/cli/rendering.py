"""Text and JSON renderings of command results."""

from fractions import Fraction

import typer
from pydantic import BaseModel
from rich.console import Console, RenderableType
from rich.table import Table

from balanced_episturmian.config import OutputFormat
from balanced_episturmian.models import (
    BalanceReport,
    CliConfig,
    ComplexityProfile,
    Verdict,
    VerificationReport,
)


def emit(config: CliConfig, payload: BaseModel, text: RenderableType) -> None:
    """Print ``payload`` as JSON or ``text`` as plain text / a rich renderable."""
    if config.output_format == OutputFormat.JSON:
        typer.echo(payload.model_dump_json(indent=2))
    elif isinstance(text, str):
        typer.echo(text)
    else:
        Console().print(text)


def render_balance(report: BalanceReport) -> str:
    match report.verdict:
        case Verdict.BALANCED:
            text = "Balanced"
        case Verdict.UNBALANCED:
            text = f"Unbalanced {report.witness}"
        case _:
            text = "Inconclusive"
    first, last = report.checked_lengths
    scope = "" if report.exact else ", bounded prefix"
    return f"{text} (checked n={first}..{last}{scope})"


def render_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def render_frequencies(frequencies: dict[int, Fraction]) -> str:
    return "\n".join(
        f"{letter}: {render_fraction(value)}" for letter, value in frequencies.items()
    )


def complexity_table(profile: ComplexityProfile, source: str) -> Table:
    title = f"Factor complexity of {source}"
    if not profile.exact:
        title += " (approximate, bounded prefix)"
    table = Table("n", "p(n)", title=title)
    for n, count in profile.values:
        table.add_row(str(n), str(count))
    return table


def verification_table(report: VerificationReport) -> Table:
    table = Table(
        "claim",
        "instances",
        "agree",
        "disagree",
        "unknown",
        "skipped",
        "evidence",
        title="PASS" if report.passed else "FAIL",
    )
    table.add_row(
        report.claim,
        str(report.instances_checked),
        str(report.agreements),
        str(len(report.disagreements)),
        str(report.unknowns),
        str(report.skipped),
        report.evidence.value,
    )
    return table


def discrepancy_table(report: VerificationReport) -> Table:
    table = Table("spec", "expected", "observed", title="Disagreements")
    for discrepancy in report.disagreements:
        table.add_row(discrepancy.spec, discrepancy.expected, discrepancy.observed)
    return table
