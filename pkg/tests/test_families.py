"""Tests for the balanced families and classification."""

from fractions import Fraction

import pytest

from balanced_episturmian.episturmian.directive import parse_spec, to_periodic
from balanced_episturmian.episturmian.families import (
    classify,
    family_spec,
    family_word,
    fraenkel_word,
    frequencies_closed_form,
    match_family,
)
from balanced_episturmian.episturmian.pal import pal
from balanced_episturmian.episturmian.search import balance_of_spec, witness_search
from balanced_episturmian.exceptions import InputValidationError, ResourceLimitError
from balanced_episturmian.models import (
    DirectiveSpec,
    EventuallyPeriodicWord,
    FamilyClass,
    FamilyVariant,
    Verdict,
)
from balanced_episturmian.words.balance import balance_check_periodic
from balanced_episturmian.words.periodic import frequencies
from balanced_episturmian.words.text import render_word
from tests import FRAENKEL_3, FRAENKEL_4, FRAENKEL_5_TEXT


class TestFraenkelWord:
    """Tests for fraenkel_word."""

    @pytest.mark.parametrize(
        ("k", "expected"),
        [
            pytest.param(1, (1,), id="k1"),
            pytest.param(2, (1, 2, 1), id="k2"),
            pytest.param(3, FRAENKEL_3, id="k3"),
            pytest.param(4, FRAENKEL_4, id="k4"),
        ],
    )
    def test_values(self, k: int, expected: tuple[int, ...]) -> None:
        assert fraenkel_word(k) == expected

    def test_fifth_word(self) -> None:
        assert render_word(fraenkel_word(5)) == FRAENKEL_5_TEXT

    def test_equals_pal_of_the_alphabet(self) -> None:
        for k in range(1, 17):
            word = fraenkel_word(k)
            assert len(word) == 2**k - 1
            assert word == pal(tuple(range(1, k + 1)))

    def test_rejects_non_positive_k(self) -> None:
        with pytest.raises(InputValidationError):
            fraenkel_word(0)

    def test_word_cap(self) -> None:
        with pytest.raises(ResourceLimitError):
            fraenkel_word(24)


class TestFrequenciesClosedForm:
    """Tests for the closed-form Fraenkel frequencies."""

    def test_k3(self) -> None:
        assert frequencies_closed_form(3) == {
            1: Fraction(4, 7),
            2: Fraction(2, 7),
            3: Fraction(1, 7),
        }

    def test_agrees_with_family_c_words(self) -> None:
        for k in range(3, 11):
            family = FamilyClass(variant=FamilyVariant.FAMILY_C, k=k)
            observed = frequencies(family_word(family))
            assert observed == frequencies_closed_form(k)
            assert len(set(observed.values())) == k
            assert sum(observed.values()) == 1

    def test_rejects_small_k(self) -> None:
        with pytest.raises(InputValidationError):
            frequencies_closed_form(2)


class TestMatchFamily:
    """Tests for structural family matching on normalized specs."""

    @pytest.mark.parametrize(
        ("text", "variant", "params"),
        [
            pytest.param("112(3)", FamilyVariant.FAMILY_A, {"n": 2, "k": 3}, id="a_2_3"),
            pytest.param("12(3)", FamilyVariant.FAMILY_A, {"n": 1, "k": 3}, id="a_1_3"),
            pytest.param("1123(4)", FamilyVariant.FAMILY_A, {"n": 2, "k": 4}, id="a_2_4"),
            pytest.param("1213(4)", FamilyVariant.FAMILY_B, {"k": 3, "ell": 1}, id="b_3_1"),
            pytest.param("121(3)", FamilyVariant.FAMILY_B, {"k": 3, "ell": 0}, id="b_3_0"),
            pytest.param("12314(5)", FamilyVariant.FAMILY_B, {"k": 4, "ell": 1}, id="b_4_1"),
            pytest.param("123(1)", FamilyVariant.FAMILY_C, {"k": 3}, id="c_3"),
            pytest.param("1234(1)", FamilyVariant.FAMILY_C, {"k": 4}, id="c_4"),
        ],
    )
    def test_members(
        self, text: str, variant: FamilyVariant, params: dict[str, int]
    ) -> None:
        family = match_family(parse_spec(text))
        assert family is not None
        assert family.variant == variant
        for name, value in params.items():
            assert getattr(family, name) == value

    @pytest.mark.parametrize(
        "text",
        [
            pytest.param("(123)", id="aperiodic"),
            pytest.param("1(2)", id="two_letters"),
            pytest.param("1232(1)", id="unbalanced"),
            pytest.param("13(2)", id="not_normalized"),
        ],
    )
    def test_non_members(self, text: str) -> None:
        assert match_family(parse_spec(text)) is None


class TestClassify:
    """Tests for classify."""

    def test_family_a(self) -> None:
        family = classify(parse_spec("112(3)"))
        assert family.variant == FamilyVariant.FAMILY_A
        assert (family.n, family.k) == (2, 3)
        assert family.normalized_spec == "112(3)"
        assert str(family) == "FamilyA n=2 k=3"

    def test_family_c(self) -> None:
        assert str(classify(parse_spec("123(1)"))) == "FamilyC k=3"

    def test_invariant_under_letter_permutation(self) -> None:
        original = classify(parse_spec("1213(4)"))
        permuted = classify(parse_spec("3431(2)"))
        assert permuted.variant == original.variant == FamilyVariant.FAMILY_B
        assert (permuted.k, permuted.ell) == (original.k, original.ell)
        assert permuted.normalized_spec == "1213(4)"

    def test_tribonacci_not_balanced(self, tribonacci_spec: DirectiveSpec) -> None:
        family = classify(tribonacci_spec)
        assert family.variant == FamilyVariant.NOT_BALANCED
        assert family.balance is not None
        witness = family.balance.witness
        assert witness is not None
        assert (witness.factor_u, witness.factor_v) == ((2, 1, 2), (1, 3, 1))
        assert witness.letter == 2
        assert str(family).startswith("NotBalanced witness=212/131")

    def test_single_letter_tail_outside_families(self) -> None:
        family = classify(parse_spec("1232(1)"))
        assert family.variant == FamilyVariant.NOT_BALANCED
        assert family.balance is not None
        assert family.balance.exact

    def test_two_letters_outside_theorem_scope(self) -> None:
        family = classify(parse_spec("1(2)"))
        assert family.variant == FamilyVariant.BALANCED
        assert family.outside_theorem_scope
        assert str(family) == "Balanced [outside theorem scope]"

    def test_sturmian_word_left_open(self) -> None:
        family = classify(parse_spec("(12)"), prefix_bound=256)
        assert family.variant == FamilyVariant.UNKNOWN
        assert family.outside_theorem_scope
        assert family.balance is not None
        assert not family.balance.exact

    def test_finite_spec_rejected(self) -> None:
        with pytest.raises(InputValidationError, match="finite directive word"):
            classify(parse_spec("123"))


class TestFamilyWord:
    """Tests for the closed-form family words."""

    def test_family_c(self) -> None:
        assert family_word(FamilyClass(variant=FamilyVariant.FAMILY_C, k=3)) == (
            EventuallyPeriodicWord(period=FRAENKEL_3)
        )
        assert family_word(FamilyClass(variant=FamilyVariant.FAMILY_C, k=4)) == (
            EventuallyPeriodicWord(period=FRAENKEL_4)
        )

    @pytest.mark.parametrize(
        "family",
        [
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_A, n=n, k=k), id=f"a_{n}_{k}")
            for n in (1, 2, 3)
            for k in (3, 4, 5)
        ]
        + [
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_B, k=k, ell=ell), id=f"b_{k}_{ell}")
            for k in (3, 4)
            for ell in (0, 1, 2)
        ]
        + [
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_C, k=k), id=f"c_{k}")
            for k in (3, 4, 5)
        ],
    )
    def test_closed_form_matches_generation(self, family: FamilyClass) -> None:
        spec = family_spec(family)
        word = family_word(family)
        assert word == to_periodic(spec)
        assert balance_check_periodic(word).verdict == Verdict.BALANCED
        recovered = match_family(spec)
        assert recovered is not None
        assert recovered.variant == family.variant

    def test_top_letters_share_a_frequency(self) -> None:
        word = family_word(FamilyClass(variant=FamilyVariant.FAMILY_A, n=2, k=4))
        values = frequencies(word)
        assert values[3] == values[4]

    @pytest.mark.parametrize(
        "family",
        [
            pytest.param(FamilyClass(variant=FamilyVariant.UNKNOWN), id="unknown"),
            pytest.param(FamilyClass(variant=FamilyVariant.FAMILY_A, n=1, k=2), id="a_k2"),
        ],
    )
    def test_invalid_family(self, family: FamilyClass) -> None:
        with pytest.raises(InputValidationError):
            family_word(family)


class TestBalanceOfSpec:
    """Tests for balance_of_spec and the progressive witness search."""

    def test_exact_for_single_letter_tails(self) -> None:
        report = balance_of_spec(parse_spec("123(1)"))
        assert report.verdict == Verdict.BALANCED
        assert report.exact

    def test_search_finds_tribonacci_witness(self, tribonacci_spec: DirectiveSpec) -> None:
        report = witness_search(tribonacci_spec, min_prefix=8)
        assert report.verdict == Verdict.UNBALANCED
        assert report.witness is not None
        assert report.witness.length == 3

    def test_search_gives_up_at_the_bound(self) -> None:
        report = witness_search(parse_spec("(12)"), prefix_bound=200)
        assert report.verdict == Verdict.INCONCLUSIVE
        assert report.checked_lengths == (1, 100)
        assert not report.exact

    def test_finite_spec_rejected(self) -> None:
        with pytest.raises(InputValidationError):
            witness_search(parse_spec("12"))

    @pytest.mark.parametrize(
        ("text", "pair"),
        [
            pytest.param("12(32)", ((2, 1, 2), (1, 3, 1)), id="1232"),
            pytest.param("1213(1)", ((1, 1, 2, 1, 1), (2, 1, 3, 1, 2)), id="12131"),
            pytest.param("1232(1)", ((2, 1, 2), (1, 3, 1)), id="12321"),
            pytest.param("(123)", ((2, 1, 2), (1, 3, 1)), id="12312"),
        ],
    )
    def test_named_witness_pairs(
        self, text: str, pair: tuple[tuple[int, ...], tuple[int, ...]]
    ) -> None:
        report = balance_of_spec(parse_spec(text))
        assert report.verdict == Verdict.UNBALANCED
        assert report.witness is not None
        assert (report.witness.factor_u, report.witness.factor_v) == pair
