"""Tests for factor-set analysis."""

import pytest

from balanced_episturmian.episturmian.directive import generate_prefix, to_periodic
from balanced_episturmian.episturmian.families import family_word
from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import (
    DirectiveSpec,
    EventuallyPeriodicWord,
    FamilyClass,
    FamilyVariant,
)
from balanced_episturmian.words.basic import smallest_period
from balanced_episturmian.words.factors import (
    complexity,
    count_factors,
    episturmian_profile,
    factor_family_of_word,
    is_episturmian_up_to,
    is_reversal_closed,
    left_special_factors,
    left_specials_are_prefixes,
    refutes_eventual_period,
    right_special_factors,
)
from balanced_episturmian.words.periodic import expand, factor_family

FIBONACCI = DirectiveSpec(tail=(1, 2))


@pytest.fixture(scope="module")
def fibonacci_prefix() -> tuple[int, ...]:
    return generate_prefix(FIBONACCI, 1_000)[:1_000]


class TestSpecialFactors:
    """Tests for right and left special factors."""

    def test_fibonacci_right_special(self, fibonacci_prefix: tuple[int, ...]) -> None:
        factors = factor_family_of_word(fibonacci_prefix, 2)
        assert right_special_factors(factors, 1) == {(1,)}

    def test_unary_has_no_special_factors(self) -> None:
        factors = factor_family_of_word((1,) * 10, 4)
        assert right_special_factors(factors, 3) == frozenset()
        assert left_special_factors(factors, 3) == frozenset()

    def test_empty_word_is_special_in_tribonacci(self) -> None:
        prefix = generate_prefix(DirectiveSpec(tail=(1, 2, 3)), 100)
        factors = factor_family_of_word(prefix, 1)
        assert right_special_factors(factors, 0) == {()}
        assert left_special_factors(factors, 0) == {()}

    def test_left_specials_of_fibonacci_are_prefixes(
        self, fibonacci_prefix: tuple[int, ...]
    ) -> None:
        factors = factor_family_of_word(fibonacci_prefix, 11)
        for n in range(11):
            assert left_special_factors(factors, n) == {fibonacci_prefix[:n]}
        assert left_specials_are_prefixes(fibonacci_prefix, factors, 10)

    def test_missing_lengths(self) -> None:
        factors = factor_family_of_word((1, 2, 1), 1)
        with pytest.raises(InputValidationError, match="missing"):
            right_special_factors(factors, 1)


class TestComplexity:
    """Tests for factor complexity."""

    def test_fibonacci_is_sturmian(self, fibonacci_prefix: tuple[int, ...]) -> None:
        factors = factor_family_of_word(fibonacci_prefix, 20)
        profile = complexity(factors, 20, exact=False)
        assert profile.as_dict() == {n: n + 1 for n in range(1, 21)}
        assert not profile.exact

    def test_fraenkel_periodic(self, fraenkel_periodic: EventuallyPeriodicWord) -> None:
        profile = complexity(factor_family(fraenkel_periodic, 8), 8)
        assert profile.as_dict() == {1: 3, 2: 5, 3: 6, 4: 7, 5: 7, 6: 7, 7: 7, 8: 7}

    def test_unary(self) -> None:
        profile = complexity(factor_family_of_word((1,) * 8, 5), 5)
        assert {count for _, count in profile.values} == {1}


class TestReversalClosure:
    """Tests for reversal closure."""

    def test_fraenkel_factors_closed(
        self, fraenkel_periodic: EventuallyPeriodicWord
    ) -> None:
        assert is_reversal_closed(factor_family(fraenkel_periodic, 3)[3])

    def test_finite_word_not_closed(self) -> None:
        assert not is_reversal_closed(factor_family_of_word((1, 1, 2), 2)[2])

    def test_empty_factor_set_closed(self) -> None:
        assert is_reversal_closed(frozenset({()}))


class TestEpisturmianProfile:
    """Tests for the structural episturmian check of family words."""

    @pytest.mark.parametrize(
        "family",
        [
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_A, n=1, k=3), id="a_1_3"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_A, n=2, k=4), id="a_2_4"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_B, k=3, ell=0), id="b_3_0"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_B, k=3, ell=1), id="b_3_1"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_C, k=4), id="c_4"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_C, k=5), id="c_5"),
        ],
    )
    def test_family_words_are_episturmian(self, family: FamilyClass) -> None:
        word = family_word(family)
        max_n = 2 * len(word.period)
        factors = factor_family(word, max_n + 1)
        profile = episturmian_profile(factors, max_n)
        assert profile.is_episturmian
        assert len(profile.rows) == max_n + 1
        assert is_episturmian_up_to(factors, max_n)

    def test_family_words_are_standard(self) -> None:
        spec = DirectiveSpec(head=(1, 2, 1), tail=(3,))
        word = to_periodic(spec)
        prefix = expand(word, 200)
        factors = factor_family(word, 21)
        assert left_specials_are_prefixes(prefix, factors, 20)

    def test_tribonacci_profile(self) -> None:
        prefix = generate_prefix(DirectiveSpec(tail=(1, 2, 3)), 2_000)
        profile = episturmian_profile(factor_family_of_word(prefix, 9), 8, exact=False)
        assert all(row.right_special == 1 for row in profile.rows)
        assert profile.is_episturmian
        assert not profile.exact

    def test_non_episturmian_word(self) -> None:
        word = EventuallyPeriodicWord(period=(1, 1, 2, 2))
        assert not is_episturmian_up_to(factor_family(word, 3), 2)


class TestAperiodicityEvidence:
    """Tests for the factor-count refutation of short eventual periods."""

    def test_count_factors(self) -> None:
        assert count_factors((1, 2, 1, 3, 1, 2, 1), 3) == 4
        assert count_factors((1, 300, 1, 300), 2) == 2

    def test_count_factors_out_of_range(self) -> None:
        with pytest.raises(InputValidationError):
            count_factors((1, 2), 3)

    def test_tribonacci_prefix(self) -> None:
        prefix = generate_prefix(DirectiveSpec(tail=(1, 2, 3)), 3_000)[:3_000]
        assert count_factors(prefix, 150) > 150
        assert refutes_eventual_period(prefix, 150)

    def test_periodic_prefix_not_refuted(
        self, fraenkel_periodic: EventuallyPeriodicWord
    ) -> None:
        assert not refutes_eventual_period(expand(fraenkel_periodic, 3_000), 150)

    def test_short_period_of_long_palindromic_prefix(self) -> None:
        # Pal(11211211) has a period below a third of its length, yet the
        # word it starts is not eventually periodic
        spec = DirectiveSpec(tail=(1, 1, 2))
        prefix = generate_prefix(spec, 54)
        assert len(prefix) == 54
        assert smallest_period(prefix) <= 15
        assert refutes_eventual_period(generate_prefix(spec, 2_000)[:2_000], 100)
