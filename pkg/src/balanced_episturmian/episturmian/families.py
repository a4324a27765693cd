"""The three families of balanced standard episturmian words.

In letters renamed by first occurrence, a balanced standard episturmian word
over at least three letters has a directive sequence

* a) ``1^n 2 3 … (k−1) k^ω`` with n ≥ 1,
* b) ``1 2 … (k−1) 1 k … (k+ℓ−1) (k+ℓ)^ω`` with k ≥ 3, ℓ ≥ 0,
* c) ``1 2 3 … k 1^ω`` with k ≥ 3.

Family b is matched with ℓ ≥ 0: the empty run ``12…(k−1)1 k^ω`` yields a
shift of a Fraenkel word and is balanced. Its k = 2 members start with 11 and
are reported as family a.
"""

import logging
from fractions import Fraction

from balanced_episturmian.episturmian.directive import normalize_letters
from balanced_episturmian.episturmian.pal import pal
from balanced_episturmian.episturmian.search import (
    DEFAULT_MIN_PREFIX,
    DEFAULT_PREFIX_BOUND,
    balance_of_spec,
)
from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import (
    DirectiveSpec,
    EventuallyPeriodicWord,
    FamilyClass,
    FamilyVariant,
    Verdict,
)
from balanced_episturmian.words.basic import (
    DEFAULT_WORD_CAP,
    Word,
    ensure_within_cap,
)

logger = logging.getLogger(__name__)


def fraenkel_word(k: int, word_cap: int = DEFAULT_WORD_CAP) -> Word:
    """Fr_k = Fr_{k-1} k Fr_{k-1} with Fr_1 = 1, of length 2^k - 1."""
    if k < 1:
        raise InputValidationError(f"Fraenkel words need k >= 1, got {k}")
    ensure_within_cap(2**k - 1, word_cap)
    word: Word = (1,)
    for letter in range(2, k + 1):
        word = word + (letter,) + word
    return word


def frequencies_closed_form(k: int) -> dict[int, Fraction]:
    """Letter i has frequency 2^(k-i) / (2^k - 1) in [Pal(12…k)]^ω."""
    if k < 3:
        raise InputValidationError(f"the closed form is stated for k >= 3, got {k}")
    denominator = 2**k - 1
    return {i: Fraction(2 ** (k - i), denominator) for i in range(1, k + 1)}


def _leading_run(word: Word, letter: int) -> int:
    run = 0
    while run < len(word) and word[run] == letter:
        run += 1
    return run


def match_family(spec: DirectiveSpec) -> FamilyClass | None:
    """Family of a spec already in first-occurrence letters, or None."""
    head, tail = spec.head, spec.tail
    if len(tail) != 1 or len(spec.letters) < 3:
        return None
    alpha = tail[0]
    if alpha == 1 and head == tuple(range(1, len(head) + 1)):
        return FamilyClass(variant=FamilyVariant.FAMILY_C, k=len(head))
    n = _leading_run(head, 1)
    if n >= 1 and head[n:] == tuple(range(2, alpha)):
        return FamilyClass(variant=FamilyVariant.FAMILY_A, n=n, k=alpha)
    if 1 in head[1:]:
        j = head.index(1, 1)
        k = j + 1
        ell = len(head) - j - 1
        if (
            k >= 3
            and head[:j] == tuple(range(1, k))
            and head[j + 1 :] == tuple(range(k, k + ell))
            and alpha == k + ell
        ):
            return FamilyClass(variant=FamilyVariant.FAMILY_B, k=k, ell=ell)
    return None


def classify(
    spec: DirectiveSpec,
    prefix_bound: int = DEFAULT_PREFIX_BOUND,
    min_prefix: int = DEFAULT_MIN_PREFIX,
    word_cap: int = DEFAULT_WORD_CAP,
) -> FamilyClass:
    """Place a directive spec in family a, b or c, or show that it is not balanced.

    Specs over at most two letters are outside the theorem's scope and are
    decided semantically. A spec over three or more letters that is balanced
    without matching a family is reported ``BALANCED`` and logged, since it
    would contradict the classification.
    """
    if spec.is_finite:
        raise InputValidationError(
            f"{spec} is a finite directive word; classification needs an infinite Δ"
        )
    normalized, _ = normalize_letters(spec)
    in_scope = len(normalized.letters) >= 3
    family = match_family(normalized) if in_scope else None
    if family is not None:
        return family.model_copy(update={"normalized_spec": str(normalized)})

    balance = balance_of_spec(spec, prefix_bound, min_prefix, word_cap)
    match balance.verdict:
        case Verdict.UNBALANCED:
            variant = FamilyVariant.NOT_BALANCED
        case Verdict.BALANCED:
            variant = FamilyVariant.BALANCED
            if in_scope:
                logger.warning("%s is balanced but matches no family", spec)
        case _:
            variant = FamilyVariant.UNKNOWN
            logger.warning("No verdict for %s; kept for manual study", spec)
    return FamilyClass(
        variant=variant,
        balance=balance,
        outside_theorem_scope=not in_scope,
        normalized_spec=str(normalized),
    )


def family_spec(family: FamilyClass) -> DirectiveSpec:
    """Directive spec of a family member, in canonical letters."""
    _require_family_parameters(family)
    match family.variant:
        case FamilyVariant.FAMILY_A:
            assert family.n is not None and family.k is not None
            head = (1,) * family.n + tuple(range(2, family.k))
            return DirectiveSpec(head=head, tail=(family.k,))
        case FamilyVariant.FAMILY_B:
            assert family.k is not None and family.ell is not None
            k, ell = family.k, family.ell
            head = tuple(range(1, k)) + (1,) + tuple(range(k, k + ell))
            return DirectiveSpec(head=head, tail=(k + ell,))
        case _:
            assert family.k is not None
            return DirectiveSpec(head=tuple(range(1, family.k + 1)), tail=(1,))


def family_word(
    family: FamilyClass, word_cap: int = DEFAULT_WORD_CAP
) -> EventuallyPeriodicWord:
    """Closed-form word of a family member.

    a) p (k−1) p (k p (k−1) p)^ω with p = Pal(1^n 2 … (k−2));
    b) p (k+ℓ−1) p ((k+ℓ) p (k+ℓ−1) p)^ω with p = Pal(1 2 … (k−1) 1 k … (k+ℓ−2)),
       and (Pal(1 2 … (k−1) 1) k)^ω when ℓ = 0;
    c) [Pal(1 2 … k)]^ω.
    """
    _require_family_parameters(family)
    match family.variant:
        case FamilyVariant.FAMILY_A:
            assert family.n is not None and family.k is not None
            k = family.k
            p = pal((1,) * family.n + tuple(range(2, k - 1)), word_cap)
            return EventuallyPeriodicWord(
                preperiod=p + (k - 1,) + p, period=(k,) + p + (k - 1,) + p
            )
        case FamilyVariant.FAMILY_B:
            assert family.k is not None and family.ell is not None
            k, ell = family.k, family.ell
            if ell == 0:
                return EventuallyPeriodicWord(
                    period=pal(tuple(range(1, k)) + (1,), word_cap) + (k,)
                )
            p = pal(tuple(range(1, k)) + (1,) + tuple(range(k, k + ell - 1)), word_cap)
            top = k + ell
            return EventuallyPeriodicWord(
                preperiod=p + (top - 1,) + p, period=(top,) + p + (top - 1,) + p
            )
        case _:
            assert family.k is not None
            return EventuallyPeriodicWord(
                period=pal(tuple(range(1, family.k + 1)), word_cap)
            )


def _require_family_parameters(family: FamilyClass) -> None:
    if not family.is_family:
        raise InputValidationError(f"{family.variant} has no family word")
    if family.variant == FamilyVariant.FAMILY_A and (family.k or 0) < 3:
        raise InputValidationError("family a words are defined for k >= 3")
    if family.variant == FamilyVariant.FAMILY_B and (family.k or 0) < 3:
        raise InputValidationError("family b words are defined for k >= 3")
