"""Shared test fixtures for balanced_episturmian tests."""

from collections.abc import Iterator

import pytest
import typer
from typer.testing import CliRunner

from balanced_episturmian.cli.app import create_app
from balanced_episturmian.config import get_settings
from balanced_episturmian.models import (
    DirectiveSpec,
    EnumerationConfig,
    EventuallyPeriodicWord,
    SearchBounds,
    TailMode,
)
from balanced_episturmian.services.verification import VerificationService
from tests import FRAENKEL_3, SMALL_PREFIX_BOUND


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Settings come from defaults only; the cache is cleared around each test."""
    monkeypatch.chdir("/")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fraenkel_periodic() -> EventuallyPeriodicWord:
    """(1213121)^ω."""
    return EventuallyPeriodicWord(period=FRAENKEL_3)


@pytest.fixture
def tribonacci_spec() -> DirectiveSpec:
    return DirectiveSpec(tail=(1, 2, 3))


@pytest.fixture
def small_bounds() -> SearchBounds:
    return SearchBounds(prefix_bound=SMALL_PREFIX_BOUND, min_prefix=64, word_cap=10_000_000)


@pytest.fixture
def single_tail_cfg() -> EnumerationConfig:
    """Three letters, heads up to three letters, single-letter tails."""
    return EnumerationConfig(
        max_alphabet=3,
        max_head_len=3,
        prefix_bound=SMALL_PREFIX_BOUND,
        tail_mode=TailMode.SINGLE_LETTER,
    )


@pytest.fixture
def periodic_tail_cfg() -> EnumerationConfig:
    """Three letters, heads up to two letters, tails up to two letters."""
    return EnumerationConfig(
        max_alphabet=3,
        max_head_len=2,
        prefix_bound=SMALL_PREFIX_BOUND,
        tail_mode=TailMode.PERIODIC,
        max_tail_len=2,
    )


@pytest.fixture
def verification_service(small_bounds: SearchBounds) -> VerificationService:
    return VerificationService(bounds=small_bounds)


@pytest.fixture
def app() -> typer.Typer:
    """CLI application built from default settings."""
    return create_app()


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
