"""Directive specs ``HEAD(TAIL)`` and the standard episturmian words they generate."""

import logging

from balanced_episturmian.episturmian.pal import GeneratorState
from balanced_episturmian.exceptions import (
    AperiodicSpecError,
    DirectiveExhaustedError,
    InputValidationError,
)
from balanced_episturmian.models import DirectiveSpec, EventuallyPeriodicWord
from balanced_episturmian.words.basic import (
    DEFAULT_WORD_CAP,
    Word,
    ensure_within_cap,
    rename_by_first_occurrence,
)
from balanced_episturmian.words.text import parse_bracketed

logger = logging.getLogger(__name__)


def parse_spec(text: str) -> DirectiveSpec:
    """Parse ``"123(1)"``, ``"(123)"`` or the finite directive ``"12131"``."""
    head, tail = parse_bracketed(text)
    return DirectiveSpec(head=head, tail=tail or ())


def normalize_letters(spec: DirectiveSpec) -> tuple[DirectiveSpec, dict[int, int]]:
    """Rename letters by first occurrence in Δ to 1, 2, 3, ...

    Every tail letter occurs in the first pass over the tail, so ``head · tail``
    fixes the renaming.
    """
    renamed, mapping = rename_by_first_occurrence(spec.head + spec.tail)
    split = len(spec.head)
    return DirectiveSpec(head=renamed[:split], tail=renamed[split:]), mapping


def alph_ult(spec: DirectiveSpec) -> tuple[frozenset[int], frozenset[int]]:
    """Letters of the word, and the letters occurring infinitely often in Δ."""
    return spec.letters, frozenset(spec.tail)


def is_strict(spec: DirectiveSpec) -> bool:
    """True when every letter of the word occurs infinitely often in Δ."""
    alph, ult = alph_ult(spec)
    return alph == ult


def first_repeated_letter(delta: Word) -> int | None:
    """First letter occurring twice in the shortest prefix of ``delta`` that repeats one."""
    seen: set[int] = set()
    for letter in delta:
        if letter in seen:
            return letter
        seen.add(letter)
    return None


def generate_prefix(
    spec: DirectiveSpec, min_len: int, word_cap: int = DEFAULT_WORD_CAP
) -> Word:
    """First palindromic prefix u_n of Pal(Δ) with at least ``min_len`` letters."""
    ensure_within_cap(min_len, word_cap)
    state = GeneratorState(word_cap)
    for letter in spec.head:
        if len(state.current) >= min_len:
            return state.current
        state.push(letter)
    if len(state.current) >= min_len:
        return state.current
    if spec.is_finite:
        raise DirectiveExhaustedError(
            f"Pal({spec}) has {len(state.current)} letters; "
            f"the finite directive cannot reach {min_len}"
        )
    while len(state.current) < min_len:
        for letter in spec.tail:
            state.push(letter)
            if len(state.current) >= min_len:
                break
    logger.debug("Generated %d letters for %s", len(state.current), spec)
    return state.current


def to_periodic(
    spec: DirectiveSpec, word_cap: int = DEFAULT_WORD_CAP
) -> EventuallyPeriodicWord:
    """Purely periodic form t^ω of Pal(head · α^ω).

    With x = α and w1 = head the incremental rule gives
    Pal(head α^(m+1)) = Pal(head α^m) Pal(head)^-1 Pal(head α^m), so the word
    repeats t = Pal(head α) with its suffix Pal(head) removed.
    """
    if spec.is_finite:
        raise InputValidationError(
            f"{spec} is a finite directive word and generates no infinite word"
        )
    if len(spec.tail) >= 2:
        raise AperiodicSpecError(str(spec))
    state = GeneratorState(word_cap)
    state.extend(spec.head)
    closure_of_head = len(state.current)
    full = state.push(spec.tail[0])
    return EventuallyPeriodicWord(period=full[: len(full) - closure_of_head])

