"""Pydantic models for the values exchanged between modules and rendered by the CLI."""

from enum import StrEnum
from typing import Annotated, Any, Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    model_validator,
)

from balanced_episturmian.config import OutputFormat
from balanced_episturmian.words.basic import (
    Word,
    absorb_preperiod,
)
from balanced_episturmian.words.text import render_bracketed, render_word

Letter = Annotated[int, Field(ge=1)]
LetterWord = tuple[Letter, ...]

SCHEMA_VERSION = 1


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class Verdict(StrEnum):
    """Balance verdicts."""

    BALANCED = "balanced"
    UNBALANCED = "unbalanced"
    INCONCLUSIVE = "inconclusive"


class Witness(_Frozen):
    """Two equal-length factors whose counts of ``letter`` differ by at least 2."""

    factor_u: LetterWord = Field(description="Factor with the larger count")
    factor_v: LetterWord = Field(description="Factor with the smaller count")
    letter: Letter
    length: int = Field(ge=1)
    position_u: int = Field(ge=0)
    position_v: int = Field(ge=0)

    @model_validator(mode="after")
    def validate_counts(self) -> Self:
        """Validate that both factors have the stated length and really differ."""
        if len(self.factor_u) != self.length or len(self.factor_v) != self.length:
            raise ValueError("witness factors must both have the stated length")
        if self.count_u - self.count_v < 2:
            raise ValueError(
                f"letter {self.letter} counts {self.count_u} and {self.count_v} "
                "differ by less than 2"
            )
        return self

    @property
    def count_u(self) -> int:
        return self.factor_u.count(self.letter)

    @property
    def count_v(self) -> int:
        return self.factor_v.count(self.letter)

    def __str__(self) -> str:
        return (
            f"{render_word(self.factor_u)}/{render_word(self.factor_v)} "
            f"over letter {self.letter} (n={self.length})"
        )


class BalanceReport(_Frozen):
    """Outcome of a balance check over a range of factor lengths."""

    verdict: Verdict
    witness: Witness | None = None
    checked_lengths: tuple[int, int] = Field(
        description="Inclusive range (first, last) of factor lengths examined"
    )
    exact: bool = Field(
        default=True,
        description="False when the verdict only covers a bounded prefix",
    )

    @model_validator(mode="after")
    def validate_witness(self) -> Self:
        """Validate that a witness is present exactly for unbalanced verdicts."""
        if self.verdict == Verdict.UNBALANCED and self.witness is None:
            raise ValueError("an unbalanced verdict requires a witness")
        if self.verdict != Verdict.UNBALANCED and self.witness is not None:
            raise ValueError("only an unbalanced verdict carries a witness")
        return self


class ComplexityProfile(_Frozen):
    """Factor complexity p(n) for n = 1..max_n."""

    values: tuple[tuple[int, int], ...]
    exact: bool = Field(
        default=True,
        description="False when factor sets come from a bounded prefix",
    )

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)


class ProfileRow(_Frozen):
    n: int = Field(ge=0)
    reversal_closed: bool
    right_special: int = Field(ge=0, description="Number of right special factors")
    left_special: int = Field(ge=0, description="Number of left special factors")


class EpisturmianProfile(_Frozen):
    """Per-length structural data of a factor family."""

    rows: tuple[ProfileRow, ...]
    exact: bool = True

    @computed_field  # type: ignore[prop-decorator]
    @property
    def is_episturmian(self) -> bool:
        return all(row.reversal_closed and row.right_special <= 1 for row in self.rows)


class EventuallyPeriodicWord(_Frozen):
    """The infinite word ``preperiod · period^ω``, always held in canonical form."""

    preperiod: LetterWord = ()
    period: LetterWord = Field(min_length=1)

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: Any) -> Any:
        """Reduce the period to its primitive root and absorb the preperiod."""
        if isinstance(data, dict) and data.get("period"):
            preperiod, period = absorb_preperiod(
                tuple(data.get("preperiod", ())), tuple(data["period"])
            )
            return {**data, "preperiod": preperiod, "period": period}
        return data

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    def letter_at(self, index: int) -> int:
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def __str__(self) -> str:
        return render_bracketed(self.preperiod, self.period)


class DirectiveSpec(_Frozen):
    """Directive sequence ``head · tail^ω``, or the finite word ``head`` when the tail is empty."""

    head: LetterWord = ()
    tail: LetterWord = ()

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: Any) -> Any:
        """Make the tail primitive and absorb trailing head letters into it."""
        if isinstance(data, dict) and data.get("tail"):
            head, tail = absorb_preperiod(
                tuple(data.get("head", ())), tuple(data["tail"])
            )
            return {**data, "head": head, "tail": tail}
        return data

    @property
    def is_finite(self) -> bool:
        return not self.tail

    @property
    def letters(self) -> frozenset[int]:
        return frozenset(self.head) | frozenset(self.tail)

    def directive_prefix(self, length: int) -> Word:
        """First ``length`` letters of Δ (fewer for an exhausted finite directive)."""
        if not self.tail or length <= len(self.head):
            return self.head[:length]
        repeats = -(-(length - len(self.head)) // len(self.tail))
        return (self.head + self.tail * repeats)[:length]

    def __str__(self) -> str:
        return render_bracketed(self.head, self.tail)


class FamilyVariant(StrEnum):
    """Classification outcomes for a directive spec."""

    FAMILY_A = "family_a"
    FAMILY_B = "family_b"
    FAMILY_C = "family_c"
    NOT_BALANCED = "not_balanced"
    UNKNOWN = "unknown"
    BALANCED = "balanced"


FAMILY_VARIANTS = frozenset(
    {FamilyVariant.FAMILY_A, FamilyVariant.FAMILY_B, FamilyVariant.FAMILY_C}
)


class FamilyClass(_Frozen):
    """Classification of a directive spec into the balanced families.

    ``BALANCED`` means balance was decided without a family: expected outside
    the theorem's scope (alphabets of at most two letters), a counterexample
    inside it.
    """

    variant: FamilyVariant
    n: int | None = None
    k: int | None = None
    ell: int | None = None
    balance: BalanceReport | None = None
    outside_theorem_scope: bool = False
    normalized_spec: str | None = Field(
        default=None, description="Spec after renaming letters by first occurrence"
    )

    @model_validator(mode="after")
    def validate_parameters(self) -> Self:
        """Validate the family parameter bounds."""
        match self.variant:
            case FamilyVariant.FAMILY_A:
                if self.n is None or self.n < 1 or self.k is None or self.k < 2:
                    raise ValueError("family a needs n >= 1 and k >= 2")
            case FamilyVariant.FAMILY_B:
                if self.k is None or self.k < 2 or self.ell is None or self.ell < 0:
                    raise ValueError("family b needs k >= 2 and ell >= 0")
            case FamilyVariant.FAMILY_C:
                if self.k is None or self.k < 3:
                    raise ValueError("family c needs k >= 3")
            case FamilyVariant.NOT_BALANCED:
                if self.balance is None or self.balance.witness is None:
                    raise ValueError("a not-balanced verdict needs a witness")
        return self

    @property
    def is_family(self) -> bool:
        return self.variant in FAMILY_VARIANTS

    def __str__(self) -> str:
        match self.variant:
            case FamilyVariant.FAMILY_A:
                text = f"FamilyA n={self.n} k={self.k}"
            case FamilyVariant.FAMILY_B:
                text = f"FamilyB k={self.k} l={self.ell}"
            case FamilyVariant.FAMILY_C:
                text = f"FamilyC k={self.k}"
            case FamilyVariant.NOT_BALANCED:
                assert self.balance is not None and self.balance.witness is not None
                text = f"NotBalanced witness={self.balance.witness}"
            case FamilyVariant.BALANCED:
                text = "Balanced"
            case _:
                text = "Unknown"
        if self.outside_theorem_scope:
            text += " [outside theorem scope]"
        return text


class TailMode(StrEnum):
    """Which tails the enumeration emits."""

    SINGLE_LETTER = "single"
    PERIODIC = "periodic"


class EnumerationConfig(_Frozen):
    """Bounds of an exhaustive directive-spec enumeration."""

    max_alphabet: int = Field(default=4, ge=1)
    max_head_len: int = Field(default=6, ge=0)
    prefix_bound: int = Field(default=10_000, ge=1)
    tail_mode: TailMode = TailMode.PERIODIC
    max_tail_len: int = Field(default=3, ge=1)

    @property
    def tail_lengths(self) -> range:
        if self.tail_mode == TailMode.SINGLE_LETTER:
            return range(1, 2)
        return range(1, self.max_tail_len + 1)


class Evidence(StrEnum):
    """Strength of what a verification run establishes."""

    EXHAUSTIVE = "exhaustive"
    BOUNDED = "bounded evidence"


class Discrepancy(_Frozen):
    spec: str
    expected: str
    observed: str


class VerificationReport(_Frozen):
    """Aggregated outcome of checking one claim over many instances."""

    schema_version: int = SCHEMA_VERSION
    claim: str
    instances_checked: int = Field(default=0, ge=0)
    agreements: int = Field(default=0, ge=0)
    disagreements: tuple[Discrepancy, ...] = ()
    unknowns: int = Field(default=0, ge=0)
    unknown_specs: tuple[str, ...] = ()
    skipped: int = Field(default=0, ge=0)
    evidence: Evidence = Evidence.EXHAUSTIVE

    @model_validator(mode="after")
    def validate_tally(self) -> Self:
        """Validate that every checked instance is tallied exactly once."""
        tallied = self.agreements + len(self.disagreements) + self.unknowns
        if tallied != self.instances_checked:
            raise ValueError(
                f"tally {tallied} does not match {self.instances_checked} instances"
            )
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.disagreements

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two reports of the same claim; the result is order independent."""
        if other.claim != self.claim:
            raise ValueError(f"cannot merge {other.claim!r} into {self.claim!r}")
        evidence = (
            Evidence.BOUNDED
            if Evidence.BOUNDED in (self.evidence, other.evidence)
            else Evidence.EXHAUSTIVE
        )
        return VerificationReport(
            claim=self.claim,
            instances_checked=self.instances_checked + other.instances_checked,
            agreements=self.agreements + other.agreements,
            disagreements=tuple(
                sorted(
                    self.disagreements + other.disagreements,
                    key=lambda d: (d.spec, d.expected, d.observed),
                )
            ),
            unknowns=self.unknowns + other.unknowns,
            unknown_specs=tuple(sorted(self.unknown_specs + other.unknown_specs)),
            skipped=self.skipped + other.skipped,
            evidence=evidence,
        )


class SearchBounds(_Frozen):
    """Limits shared by witness search, generation and verification."""

    prefix_bound: int = Field(default=10_000, ge=1)
    min_prefix: int = Field(default=64, ge=1)
    word_cap: int = Field(default=10_000_000, ge=1)


class CliConfig(_Frozen):
    """Per-invocation CLI configuration derived from settings and global flags."""

    output_format: OutputFormat = OutputFormat.TEXT
    prefix_bound: int = Field(default=10_000, ge=1)
    word_cap: int = Field(default=10_000_000, ge=1)
    witness_min_prefix: int = Field(default=64, ge=1)
    deterministic: Literal[True] = True

    @model_validator(mode="after")
    def validate_caps(self) -> Self:
        """Validate that the prefix bound fits under the word cap."""
        if self.prefix_bound > self.word_cap:
            raise ValueError("prefix bound must not exceed the word cap")
        return self

    @property
    def bounds(self) -> SearchBounds:
        return SearchBounds(
            prefix_bound=self.prefix_bound,
            min_prefix=self.witness_min_prefix,
            word_cap=self.word_cap,
        )
