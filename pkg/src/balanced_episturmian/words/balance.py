"""Balance checking by sliding-window letter counts.

For a word w and a letter a, the counts |u|_a over all length-n windows u are
differences of one cumulative count vector, so each length costs one vectorised
subtraction. A length is unbalanced as soon as max - min >= 2 for some letter.
"""

import logging
from collections.abc import Iterable

import numpy as np

from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import (
    BalanceReport,
    EventuallyPeriodicWord,
    Verdict,
    Witness,
)
from balanced_episturmian.words.basic import DEFAULT_WORD_CAP, Word
from balanced_episturmian.words.periodic import expand

logger = logging.getLogger(__name__)


class WindowCounter:
    """Cumulative letter counts of a finite word, one column per letter."""

    def __init__(self, word: Word) -> None:
        self.word = word
        self.letters = sorted(set(word))
        letters = np.asarray(self.letters, dtype=np.int64)
        onehot = np.asarray(word, dtype=np.int64)[:, None] == letters[None, :]
        self.counts = np.zeros((len(word) + 1, len(self.letters)), dtype=np.int32)
        if word:
            self.counts[1:] = np.cumsum(onehot, axis=0, dtype=np.int32)

    def windows(self, n: int) -> np.ndarray:
        """Counts of every letter in every length-``n`` window (rows = start)."""
        return self.counts[n:] - self.counts[:-n]

    def witness_at(self, n: int) -> Witness | None:
        """Witness of length ``n``, reporting the largest violating letter.

        The factor with the larger count comes first; both positions are the
        first windows attaining the max and min counts.

        Ties between letters go to the largest letter, not the smallest: in
        1122112 both letters violate at n = 2, and the witness is 22/11 over
        letter 2.
        """
        if n < 1 or n > len(self.word):
            return None
        windows = self.windows(n)
        spread = windows.max(axis=0) - windows.min(axis=0)
        for column in reversed(range(len(self.letters))):
            if spread[column] >= 2:
                counts = windows[:, column]
                position_u = int(counts.argmax())
                position_v = int(counts.argmin())
                return Witness(
                    factor_u=self.word[position_u : position_u + n],
                    factor_v=self.word[position_v : position_v + n],
                    letter=self.letters[column],
                    length=n,
                    position_u=position_u,
                    position_v=position_v,
                )
        return None

    def first_witness(self, lengths: Iterable[int]) -> Witness | None:
        for n in lengths:
            witness = self.witness_at(n)
            if witness is not None:
                return witness
        return None


def balance_check_finite(word: Word, max_len: int) -> BalanceReport:
    """Check factor lengths 1..max_len of a finite word; the smallest witness wins."""
    if max_len > len(word):
        raise InputValidationError(
            f"max length {max_len} exceeds the word length {len(word)}"
        )
    witness = WindowCounter(word).first_witness(range(1, max_len + 1))
    if witness is None:
        return BalanceReport(verdict=Verdict.BALANCED, checked_lengths=(1, max_len))
    return BalanceReport(
        verdict=Verdict.UNBALANCED,
        witness=witness,
        checked_lengths=(1, witness.length),
    )


def periodic_length_bound(word: EventuallyPeriodicWord) -> int:
    """Largest factor length the exact periodic check examines (|pre| + 2|period|)."""
    return len(word.preperiod) + 2 * len(word.period)


def balance_check_periodic(
    word: EventuallyPeriodicWord, word_cap: int = DEFAULT_WORD_CAP
) -> BalanceReport:
    """Exact balance verdict for an eventually periodic infinite word."""
    bound = periodic_length_bound(word)
    prefix = expand(word, 2 * bound - 1, word_cap)
    witness = WindowCounter(prefix).first_witness(range(1, bound + 1))
    if witness is None:
        return BalanceReport(verdict=Verdict.BALANCED, checked_lengths=(1, bound))
    logger.debug("Periodic word %s is unbalanced: %s", word, witness)
    return BalanceReport(
        verdict=Verdict.UNBALANCED,
        witness=witness,
        checked_lengths=(1, witness.length),
    )


def validate_witness(word: Word, witness: Witness) -> bool:
    """Re-check a witness against the raw windows of ``word``."""
    n = witness.length
    factor_u = word[witness.position_u : witness.position_u + n]
    factor_v = word[witness.position_v : witness.position_v + n]
    return (
        factor_u == witness.factor_u
        and factor_v == witness.factor_v
        and factor_u.count(witness.letter) - factor_v.count(witness.letter) >= 2
    )


def validate_periodic_witness(
    word: EventuallyPeriodicWord,
    witness: Witness,
    word_cap: int = DEFAULT_WORD_CAP,
) -> bool:
    end = max(witness.position_u, witness.position_v) + witness.length
    return validate_witness(expand(word, end, word_cap), witness)
