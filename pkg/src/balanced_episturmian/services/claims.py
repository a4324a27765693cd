"""Catalogue of the unbalance claims checked by the verifier.

Each claim says that a balanced standard episturmian word over at least three
letters cannot have a directive sequence of a certain shape. The verifier
enumerates specs that do have that shape (hypothesis true, conclusion false)
and expects every one of them to be unbalanced.

Predicates read Δ in first-occurrence letters, unrolled far enough that every
tail letter shows up after any finite run of the head.
"""

from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from balanced_episturmian.episturmian.families import match_family
from balanced_episturmian.episturmian.pal import pal
from balanced_episturmian.models import DirectiveSpec, FamilyVariant
from balanced_episturmian.words.basic import Word


class NamedFactors(BaseModel):
    """Two factors the proof exhibits, both occurring in Pal(Δ[:directive_length])."""

    model_config = ConfigDict(frozen=True)

    factors: tuple[Word, Word]
    directive_length: int


type Violation = Callable[[DirectiveSpec, Word], bool]
type Shape = Callable[[Word], NamedFactors | None]


class UnbalanceClaim(BaseModel):
    """A claim id, its statement, the violation predicate and the named witness shape."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    claim_id: str
    statement: str
    violated_by: Violation
    shape: Shape | None = None


def unroll(spec: DirectiveSpec) -> Word:
    """Δ long enough to show the head, any finite run and two full tail passes."""
    return spec.directive_prefix(
        len(spec.head) + len(spec.tail) * (len(spec.letters) + 2)
    )


def first_repeat(delta: Word) -> tuple[int, int] | None:
    """Positions (first, second) of the first letter of Δ to occur twice."""
    seen: dict[int, int] = {}
    for position, letter in enumerate(delta):
        if letter in seen:
            return seen[letter], position
        seen[letter] = position
    return None


def run_length(delta: Word, start: int) -> int:
    end = start
    while end < len(delta) and delta[end] == delta[start]:
        end += 1
    return end - start


def _family_is(spec: DirectiveSpec, *variants: FamilyVariant) -> bool:
    family = match_family(spec)
    return family is not None and family.variant in variants


def _first_repeat_run(_spec: DirectiveSpec, delta: Word) -> bool:
    repeat = first_repeat(delta)
    if repeat is None:
        return False
    i, j = repeat
    if j != i + 1 or i == 0:
        return False
    end = i + run_length(delta, i)
    if end == len(delta):
        return False
    return bool(set(delta[:i]) & set(delta[end:]))


def _first_repeat_not_first(spec: DirectiveSpec, delta: Word) -> bool:
    repeat = first_repeat(delta)
    if repeat is None or delta[repeat[0]] == delta[0]:
        return False
    family = match_family(spec)
    if family is None or family.variant != FamilyVariant.FAMILY_A:
        return True
    return family.n != 1


def _first_repeat_not_first_shape(delta: Word) -> NamedFactors | None:
    """k p k with p y1 p1, or with p z1 p1 when k repeats at once and z1 is new.

    Here Δ = x k y k z, k the first repeated letter, p = Pal(x).
    """
    repeat = first_repeat(delta)
    if repeat is None:
        return None
    i, j = repeat
    k = delta[i]
    p = pal(delta[:i])
    if j > i + 1:
        return NamedFactors(
            factors=((k,) + p + (k,), p + (delta[i + 1], p[0])),
            directive_length=j + 1,
        )
    end = i + run_length(delta, i)
    if end == len(delta) or delta[end] in delta[:end]:
        return None
    return NamedFactors(
        factors=((k,) + p + (k,), p + (delta[end], p[0])),
        directive_length=end + 1,
    )


def _leading_run(spec: DirectiveSpec, delta: Word) -> bool:
    if delta[:2] != (1, 1) or run_length(delta, 0) == len(delta):
        return False
    return not _family_is(spec, FamilyVariant.FAMILY_A)


def _one_y_one(delta: Word) -> int | None:
    """Position of the second 1 when Δ = 1 y 1 z with y nonempty and 1-free."""
    repeat = first_repeat(delta)
    if repeat is None or repeat[0] != 0 or repeat[1] < 2:
        return None
    return repeat[1]


def _one_y_one_disjoint(_spec: DirectiveSpec, delta: Word) -> bool:
    j = _one_y_one(delta)
    return j is not None and bool(set(delta[1:j]) & set(delta[j + 1 :]))


def _one_y_one_no_third(_spec: DirectiveSpec, delta: Word) -> bool:
    j = _one_y_one(delta)
    return j is not None and delta[j + 1] != 1 and 1 in delta[j + 1 :]


def _one_y_one_z(spec: DirectiveSpec, delta: Word) -> bool:
    j = _one_y_one(delta)
    if j is None or 1 in delta[j + 1 :]:
        return False
    return not _family_is(spec, FamilyVariant.FAMILY_B)


def _one_y_one_run(spec: DirectiveSpec, delta: Word) -> bool:
    j = _one_y_one(delta)
    if j is None or delta[j + 1] != 1:
        return False
    return not _family_is(spec, FamilyVariant.FAMILY_C)


UNBALANCE_CLAIMS: dict[str, UnbalanceClaim] = {
    claim.claim_id: claim
    for claim in (
        UnbalanceClaim(
            claim_id="first-repeat-run",
            statement="Δ = x α^ℓ y with α the first repeated letter and ℓ ≥ 2: "
            "no letter of x occurs in y",
            violated_by=_first_repeat_run,
        ),
        UnbalanceClaim(
            claim_id="first-repeat-not-first",
            statement="first repeated letter k is not Δ1: Δ = 12…(k−1)k^ω",
            violated_by=_first_repeat_not_first,
            shape=_first_repeat_not_first_shape,
        ),
        UnbalanceClaim(
            claim_id="leading-run",
            statement="Δ = 1^ℓ z with ℓ ≥ 2 and z1 ≠ 1: Δ = 1^ℓ 23…(k−1)k^ω",
            violated_by=_leading_run,
        ),
        UnbalanceClaim(
            claim_id="one-y-one-disjoint",
            statement="Δ = 1y1z with 1 the first repeated letter and y ≠ ε: "
            "no letter of y occurs in z",
            violated_by=_one_y_one_disjoint,
        ),
        UnbalanceClaim(
            claim_id="one-y-one-no-third",
            statement="Δ = 1y1z with y ≠ ε, |y|1 = 0 and z1 ≠ 1: |z|1 = 0",
            violated_by=_one_y_one_no_third,
        ),
        UnbalanceClaim(
            claim_id="one-y-one-z",
            statement="Δ = 1y1z with |y|1 = |z|1 = 0 and y ≠ ε of distinct letters: "
            "Δ = 12…(k−1)1k…(k+ℓ−1)(k+ℓ)^ω",
            violated_by=_one_y_one_z,
        ),
        UnbalanceClaim(
            claim_id="one-y-one-run",
            statement="Δ = 1y1^ℓ z with ℓ ≥ 2 and y ≠ ε of distinct letters, 1-free: "
            "Δ = 12…k(1)^ω",
            violated_by=_one_y_one_run,
        ),
    )
}

THEOREM_FAMILIES = "theorem-families"
PERIODICITY = "periodicity"
FRAENKEL = "fraenkel"

CROSS_CHECKS: dict[str, str] = {
    THEOREM_FAMILIES: "every balanced standard episturmian word over at least three "
    "letters lies in family a, b or c",
    PERIODICITY: "a standard episturmian word is ultimately periodic iff Δ = wα^ω",
    FRAENKEL: "for k ≥ 3, [Pal(12…k)]^ω is the only balanced word over k letters "
    "with pairwise distinct frequencies, up to letter permutation",
}

CLAIM_IDS: tuple[str, ...] = (*UNBALANCE_CLAIMS, *CROSS_CHECKS)


def claim_statement(claim_id: str) -> str:
    if claim_id in UNBALANCE_CLAIMS:
        return UNBALANCE_CLAIMS[claim_id].statement
    return CROSS_CHECKS[claim_id]
