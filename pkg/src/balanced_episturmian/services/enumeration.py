"""Exhaustive enumeration of canonical directive specs."""

from collections.abc import Iterator

from balanced_episturmian.models import DirectiveSpec, EnumerationConfig
from balanced_episturmian.words.basic import Word, primitive_root


def restricted_growth_words(length: int, max_letter: int) -> Iterator[Word]:
    """Words whose letters first occur in the order 1, 2, 3, ... (lexicographic)."""
    if length == 0:
        yield ()
        return

    def extend(prefix: Word, largest: int) -> Iterator[Word]:
        if len(prefix) == length:
            yield prefix
            return
        for letter in range(1, min(largest + 1, max_letter) + 1):
            yield from extend(prefix + (letter,), max(largest, letter))

    yield from extend((), 0)


def enumerate_specs(cfg: EnumerationConfig) -> Iterator[DirectiveSpec]:
    """Every canonical spec within ``cfg``, one per letter-permutation class.

    Δ = head · tail is a restricted growth word, so no two specs differ by a
    renaming; a split is canonical when the tail is primitive and the head
    does not end with the tail's last letter.
    """
    for head_len in range(cfg.max_head_len + 1):
        for tail_len in cfg.tail_lengths:
            for delta in restricted_growth_words(head_len + tail_len, cfg.max_alphabet):
                head, tail = delta[:head_len], delta[head_len:]
                if primitive_root(tail) != tail:
                    continue
                if head and head[-1] == tail[-1]:
                    continue
                yield DirectiveSpec(head=head, tail=tail)
