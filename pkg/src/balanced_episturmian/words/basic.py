"""Finite-word primitives: reversal, palindromes, closure, Parikh counts, periods."""

import logging
from collections import Counter

from balanced_episturmian.exceptions import ResourceLimitError

type Word = tuple[int, ...]

EMPTY: Word = ()

logger = logging.getLogger(__name__)


def reversal(word: Word) -> Word:
    """Return the letters of ``word`` in reverse order."""
    return word[::-1]


def is_palindrome(word: Word) -> bool:
    return word == word[::-1]


def failure_function(word: Word) -> list[int]:
    """KMP failure function: ``fail[i]`` is the longest proper border of ``word[:i+1]``."""
    fail = [0] * len(word)
    border = 0
    for i in range(1, len(word)):
        while border and word[i] != word[border]:
            border = fail[border - 1]
        if word[i] == word[border]:
            border += 1
        fail[i] = border
    return fail


def smallest_period(word: Word) -> int:
    """Smallest p > 0 with ``word[i] == word[i + p]`` for every valid i (0 for ε)."""
    if not word:
        return 0
    return len(word) - failure_function(word)[-1]


def primitive_root(word: Word) -> Word:
    """Shortest u with ``word == u^m``; ``word`` itself when it is primitive."""
    if not word:
        return word
    p = smallest_period(word)
    if len(word) % p == 0:
        return word[:p]
    return word


def longest_palindromic_suffix(word: Word) -> int:
    """Length of the longest palindromic suffix of ``word``.

    A prefix of the reversal that is also a suffix of ``word`` is a palindromic
    suffix, so the answer is the last failure value of ``rev(w) · 0 · w``.
    Letters are positive, so 0 never matches.
    """
    if not word:
        return 0
    return failure_function(reversal(word) + (0,) + word)[-1]


def palindromic_closure(word: Word) -> Word:
    """Shortest palindrome having ``word`` as a prefix."""
    overlap = longest_palindromic_suffix(word)
    return word + reversal(word[: len(word) - overlap])


def parikh(word: Word) -> dict[int, int]:
    """Letter counts of ``word``; letters absent from the word are omitted."""
    return dict(sorted(Counter(word).items()))


def alphabet(word: Word) -> frozenset[int]:
    return frozenset(word)


def factor_set(word: Word, n: int) -> frozenset[Word]:
    """Distinct length-``n`` factors of ``word``."""
    if n < 0:
        raise ValueError("factor length must be non-negative")
    if n > len(word):
        return frozenset()
    return frozenset(word[i : i + n] for i in range(len(word) - n + 1))


def occurs_in(factor: Word, word: Word) -> bool:
    n = len(factor)
    return any(word[i : i + n] == factor for i in range(len(word) - n + 1))


def rename_by_first_occurrence(word: Word) -> tuple[Word, dict[int, int]]:
    """Rename letters to 1, 2, 3, ... in order of first occurrence."""
    mapping: dict[int, int] = {}
    for letter in word:
        if letter not in mapping:
            mapping[letter] = len(mapping) + 1
    return tuple(mapping[letter] for letter in word), mapping


def absorb_preperiod(preperiod: Word, period: Word) -> tuple[Word, Word]:
    """Canonical (preperiod, period) pair of the word ``preperiod · period^ω``.

    The period is reduced to its primitive root, then trailing preperiod
    letters equal to the last period letter are absorbed by rotating the period.
    """
    period = primitive_root(period)
    if not period:
        return preperiod, period
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1:] + period[:-1]
    return preperiod, period


DEFAULT_WORD_CAP = 10_000_000


def ensure_within_cap(length: int, word_cap: int = DEFAULT_WORD_CAP) -> None:
    """Raise ``ResourceLimitError`` when a word of ``length`` letters is too large."""
    if length > word_cap:
        logger.warning("Word-size guard tripped: %d > %d", length, word_cap)
        raise ResourceLimitError(length, word_cap)
