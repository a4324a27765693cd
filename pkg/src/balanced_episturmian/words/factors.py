"""Factor-set analysis: special factors, complexity, reversal closure."""

from collections import defaultdict
from collections.abc import Mapping

from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import (
    ComplexityProfile,
    EpisturmianProfile,
    ProfileRow,
)
from balanced_episturmian.words.basic import Word, factor_set, reversal

type FactorFamily = Mapping[int, frozenset[Word]]


def factor_family_of_word(word: Word, max_n: int) -> dict[int, frozenset[Word]]:
    """Factor sets F_0..F_max_n of a finite word."""
    return {n: factor_set(word, n) for n in range(max_n + 1)}


def _require(factors: FactorFamily, *lengths: int) -> None:
    missing = [n for n in lengths if n not in factors]
    if missing:
        raise InputValidationError(f"factor sets missing for lengths {missing}")


def right_special_factors(factors: FactorFamily, n: int) -> frozenset[Word]:
    """Factors f of length n with fa, fb in F_{n+1} for two letters a != b."""
    _require(factors, n, n + 1)
    extensions: dict[Word, set[int]] = defaultdict(set)
    for longer in factors[n + 1]:
        extensions[longer[:-1]].add(longer[-1])
    return frozenset(f for f in factors[n] if len(extensions.get(f, ())) >= 2)


def left_special_factors(factors: FactorFamily, n: int) -> frozenset[Word]:
    """Factors f of length n with af, bf in F_{n+1} for two letters a != b."""
    _require(factors, n, n + 1)
    extensions: dict[Word, set[int]] = defaultdict(set)
    for longer in factors[n + 1]:
        extensions[longer[1:]].add(longer[0])
    return frozenset(f for f in factors[n] if len(extensions.get(f, ())) >= 2)


def complexity(
    factors: FactorFamily, max_n: int, exact: bool = True
) -> ComplexityProfile:
    """p(n) = |F_n| for n = 1..max_n."""
    _require(factors, *range(1, max_n + 1))
    return ComplexityProfile(
        values=tuple((n, len(factors[n])) for n in range(1, max_n + 1)),
        exact=exact,
    )


def is_reversal_closed(factors: frozenset[Word]) -> bool:
    return all(reversal(f) in factors for f in factors)


def episturmian_profile(
    factors: FactorFamily, max_n: int, exact: bool = True
) -> EpisturmianProfile:
    """Reversal closure and special-factor counts of F_0..F_max_n."""
    _require(factors, *range(max_n + 2))
    return EpisturmianProfile(
        rows=tuple(
            ProfileRow(
                n=n,
                reversal_closed=is_reversal_closed(factors[n]),
                right_special=len(right_special_factors(factors, n)),
                left_special=len(left_special_factors(factors, n)),
            )
            for n in range(max_n + 1)
        ),
        exact=exact,
    )


def is_episturmian_up_to(factors: FactorFamily, max_n: int) -> bool:
    """Every F_n (n <= max_n) is reversal closed with at most one right special factor."""
    return episturmian_profile(factors, max_n).is_episturmian


def left_specials_are_prefixes(word: Word, factors: FactorFamily, max_n: int) -> bool:
    """Every left special factor of length <= max_n is a prefix of ``word``."""
    _require(factors, *range(max_n + 2))
    return all(
        f == word[:n]
        for n in range(max_n + 1)
        for f in left_special_factors(factors, n)
    )


def count_factors(word: Word, n: int) -> int:
    """Number of distinct length-``n`` factors of a finite word."""
    if n < 0 or n > len(word):
        raise InputValidationError(
            f"no factors of length {n} in a {len(word)}-letter word"
        )
    if word and max(word) < 256:
        data = bytes(word)
        return len({data[i : i + n] for i in range(len(data) - n + 1)})
    return len(factor_set(word, n))


def refutes_eventual_period(prefix: Word, bound: int) -> bool:
    """True when no word x y^ω with |x| + |y| <= bound starts with ``prefix``.

    Such a word has at most |x| + |y| factors of each length, so more than
    ``bound`` distinct factors of length ``bound`` rule all of them out.
    """
    return count_factors(prefix, bound) > bound
