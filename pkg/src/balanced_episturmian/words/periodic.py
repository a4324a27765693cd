"""Eventually periodic words: expansion, frequencies, factor sets and classes."""

from fractions import Fraction

from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import EventuallyPeriodicWord
from balanced_episturmian.words.basic import (
    DEFAULT_WORD_CAP,
    Word,
    ensure_within_cap,
    rename_by_first_occurrence,
)


def expand(
    word: EventuallyPeriodicWord, length: int, word_cap: int = DEFAULT_WORD_CAP
) -> Word:
    """Prefix of ``length`` letters of the infinite word."""
    ensure_within_cap(length, word_cap)
    pre, period = word.preperiod, word.period
    if length <= len(pre):
        return pre[:length]
    repeats = -(-(length - len(pre)) // len(period))
    return (pre + period * repeats)[:length]


def frequencies(word: EventuallyPeriodicWord) -> dict[int, Fraction]:
    """Exact letter frequencies; letters seen only in the preperiod get 0."""
    q = len(word.period)
    letters = sorted(set(word.preperiod) | set(word.period))
    return {letter: Fraction(word.period.count(letter), q) for letter in letters}


def factor_family(
    word: EventuallyPeriodicWord, max_n: int, word_cap: int = DEFAULT_WORD_CAP
) -> dict[int, frozenset[Word]]:
    """Exact factor sets F_0..F_max_n.

    Every factor occurs at a start position below |preperiod| + |period|, so
    those windows of a long enough prefix are all of them.
    """
    starts = len(word.preperiod) + len(word.period)
    prefix = expand(word, starts + max_n, word_cap)
    return {
        n: frozenset(prefix[i : i + n] for i in range(starts)) for n in range(max_n + 1)
    }


def canonical_class(word: EventuallyPeriodicWord) -> Word:
    """Representative of the word's language up to letter renaming.

    For a purely periodic word this is the least, over all rotations of the
    period, of the rotation renamed by first occurrence.
    """
    if not word.is_purely_periodic:
        raise InputValidationError(
            f"{word} has a preperiod; factor classes are defined for purely "
            "periodic words"
        )
    period = word.period
    doubled = period + period
    return min(
        rename_by_first_occurrence(doubled[i : i + len(period)])[0]
        for i in range(len(period))
    )


def same_factor_class(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> bool:
    """True iff ``u`` and ``v`` have the same language up to a letter permutation."""
    return canonical_class(u) == canonical_class(v)
