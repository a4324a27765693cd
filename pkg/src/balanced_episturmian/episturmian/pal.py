"""Iterated palindromic closure.

``Pal(w)`` folds the palindromic right closure over the letters of w. The
generator applies the incremental rule instead of re-closing: when x is new,
Pal(wx) = Pal(w) x Pal(w); otherwise, writing w = w1 x w2 with w2 x-free,
Pal(wx) = Pal(w) Pal(w1)^-1 Pal(w), where Pal(w1) is the longest palindromic
prefix of Pal(w) followed by x.
"""

import logging
from collections.abc import Iterable

from balanced_episturmian.words.basic import (
    DEFAULT_WORD_CAP,
    Word,
    ensure_within_cap,
    palindromic_closure,
)

logger = logging.getLogger(__name__)


class GeneratorState:
    """Palindromic prefix u_n of a standard episturmian word, grown letter by letter.

    ``prefix_lengths[x]`` is |Pal(w1)| for the last occurrence of x in the
    directive read so far; letters not read yet are absent.
    """

    def __init__(self, word_cap: int = DEFAULT_WORD_CAP) -> None:
        self.word_cap = word_cap
        self.current: Word = ()
        self.directive: Word = ()
        self._prefix_lengths: dict[int, int] = {}

    @property
    def prefix_lengths(self) -> dict[int, int]:
        return dict(self._prefix_lengths)

    def push(self, letter: int) -> Word:
        """Apply one closure step for ``letter`` and return the new palindrome."""
        current = self.current
        overlap = self._prefix_lengths.get(letter)
        if overlap is None:
            ensure_within_cap(2 * len(current) + 1, self.word_cap)
            grown = current + (letter,) + current
        else:
            ensure_within_cap(2 * len(current) - overlap, self.word_cap)
            grown = current + current[overlap:]
        self._prefix_lengths[letter] = len(current)
        self.current = grown
        self.directive += (letter,)
        return grown

    def extend(self, letters: Iterable[int]) -> Word:
        for letter in letters:
            self.push(letter)
        return self.current


def pal(word: Word, word_cap: int = DEFAULT_WORD_CAP) -> Word:
    """Pal(w) by the incremental rule."""
    return GeneratorState(word_cap).extend(word)


def pal_naive(word: Word, word_cap: int = DEFAULT_WORD_CAP) -> Word:
    """Pal(w) by repeated palindromic closure, the definition taken literally."""
    current: Word = ()
    for letter in word:
        current = palindromic_closure(current + (letter,))
        ensure_within_cap(len(current), word_cap)
    return current
