"""Verification service: exhaustive desk-scale checks of the classification claims.

Every spec of an enumeration is checked on its own and yields a one-instance
``VerificationReport``; reports are merged, so chunks can run in worker
processes and be combined in any order.
"""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from itertools import repeat

from balanced_episturmian.episturmian.directive import (
    generate_prefix,
    normalize_letters,
    to_periodic,
)
from balanced_episturmian.episturmian.families import (
    classify,
    family_spec,
    family_word,
    frequencies_closed_form,
    match_family,
)
from balanced_episturmian.episturmian.pal import pal
from balanced_episturmian.episturmian.search import balance_of_spec
from balanced_episturmian.exceptions import InputValidationError, UnknownClaimError
from balanced_episturmian.models import (
    BalanceReport,
    DirectiveSpec,
    Discrepancy,
    EnumerationConfig,
    Evidence,
    FamilyClass,
    FamilyVariant,
    SearchBounds,
    TailMode,
    Verdict,
    VerificationReport,
)
from balanced_episturmian.services.claims import (
    CLAIM_IDS,
    FRAENKEL,
    PERIODICITY,
    THEOREM_FAMILIES,
    UNBALANCE_CLAIMS,
    unroll,
)
from balanced_episturmian.services.enumeration import enumerate_specs
from balanced_episturmian.words.balance import (
    balance_check_periodic,
    validate_periodic_witness,
    validate_witness,
)
from balanced_episturmian.words.basic import occurs_in
from balanced_episturmian.words.factors import refutes_eventual_period
from balanced_episturmian.words.periodic import (
    canonical_class,
    expand,
    frequencies,
)
from balanced_episturmian.words.text import render_word

logger = logging.getLogger(__name__)

DEFAULT_FRAENKEL_K = range(3, 6)
PERIODS_COMPARED = 5
APERIODICITY_WINDOW_DIVISOR = 20


def _agreement(
    claim: str, evidence: Evidence = Evidence.EXHAUSTIVE
) -> VerificationReport:
    return VerificationReport(
        claim=claim, instances_checked=1, agreements=1, evidence=evidence
    )


def _disagreement(
    claim: str, spec: object, expected: str, observed: str
) -> VerificationReport:
    logger.warning(
        "%s disagrees on %s: expected %s, got %s", claim, spec, expected, observed
    )
    return VerificationReport(
        claim=claim,
        instances_checked=1,
        disagreements=(
            Discrepancy(spec=str(spec), expected=expected, observed=observed),
        ),
    )


def _unknown(claim: str, spec: DirectiveSpec) -> VerificationReport:
    return VerificationReport(
        claim=claim, instances_checked=1, unknowns=1, unknown_specs=(str(spec),)
    )


def _skipped(claim: str) -> VerificationReport:
    return VerificationReport(claim=claim, skipped=1)


def witness_holds(
    spec: DirectiveSpec, report: BalanceReport, word_cap: int
) -> bool:
    """Re-check the witness of an unbalanced report against the generated word."""
    witness = report.witness
    if witness is None:
        return False
    if len(spec.tail) == 1:
        periodic = to_periodic(spec, word_cap)
        return validate_periodic_witness(periodic, witness, word_cap)
    end = max(witness.position_u, witness.position_v) + witness.length
    return validate_witness(generate_prefix(spec, end, word_cap), witness)


def _check_family_member(
    spec: DirectiveSpec,
    normalized: DirectiveSpec,
    family: FamilyClass,
    bounds: SearchBounds,
) -> VerificationReport:
    balance = balance_of_spec(
        spec, bounds.prefix_bound, bounds.min_prefix, bounds.word_cap
    )
    if balance.verdict != Verdict.BALANCED:
        return _disagreement(
            THEOREM_FAMILIES, spec, "balanced", f"{family}, {balance.witness}"
        )
    closed_form = family_word(family, bounds.word_cap)
    generated = to_periodic(normalized, bounds.word_cap)
    if closed_form != generated:
        return _disagreement(
            THEOREM_FAMILIES, spec, f"{family} word {closed_form}", str(generated)
        )
    return _agreement(THEOREM_FAMILIES)


def check_theorem_families(
    spec: DirectiveSpec, bounds: SearchBounds
) -> VerificationReport:
    """Classification against the semantic balance verdict for one spec."""
    normalized, _ = normalize_letters(spec)
    if len(normalized.letters) < 3:
        return _skipped(THEOREM_FAMILIES)
    family = classify(spec, bounds.prefix_bound, bounds.min_prefix, bounds.word_cap)
    if family.is_family:
        return _check_family_member(spec, normalized, family, bounds)
    match family.variant:
        case FamilyVariant.NOT_BALANCED:
            assert family.balance is not None
            if not witness_holds(spec, family.balance, bounds.word_cap):
                return _disagreement(
                    THEOREM_FAMILIES,
                    spec,
                    "a valid witness",
                    str(family.balance.witness),
                )
            return _agreement(THEOREM_FAMILIES)
        case FamilyVariant.BALANCED:
            return _disagreement(
                THEOREM_FAMILIES,
                spec,
                "a family or a witness",
                "balanced without a family",
            )
        case _:
            return _unknown(THEOREM_FAMILIES, spec)


def check_unbalance_claim(
    claim_id: str, spec: DirectiveSpec, bounds: SearchBounds
) -> VerificationReport:
    """One spec against one unbalance claim; specs outside the hypothesis are skipped."""
    claim = UNBALANCE_CLAIMS[claim_id]
    normalized, _ = normalize_letters(spec)
    if len(normalized.letters) < 3:
        return _skipped(claim_id)
    delta = unroll(normalized)
    if not claim.violated_by(normalized, delta):
        return _skipped(claim_id)

    balance = balance_of_spec(
        normalized, bounds.prefix_bound, bounds.min_prefix, bounds.word_cap
    )
    match balance.verdict:
        case Verdict.BALANCED:
            return _disagreement(claim_id, normalized, "unbalanced", "balanced")
        case Verdict.INCONCLUSIVE:
            return _unknown(claim_id, normalized)
    if not witness_holds(normalized, balance, bounds.word_cap):
        return _disagreement(
            claim_id, normalized, "a valid witness", str(balance.witness)
        )

    if claim.shape is not None:
        named = claim.shape(delta)
        if named is not None:
            word = pal(delta[: named.directive_length], bounds.word_cap)
            missing = [f for f in named.factors if not occurs_in(f, word)]
            if missing:
                return _disagreement(
                    claim_id,
                    normalized,
                    "factors " + " and ".join(render_word(f) for f in named.factors),
                    "missing " + " and ".join(render_word(f) for f in missing),
                )
    return _agreement(claim_id)


def check_periodicity(spec: DirectiveSpec, bounds: SearchBounds) -> VerificationReport:
    """Eventual periodicity for one spec.

    Single-letter tails: the closed form t^ω matches the generated word over
    several periods. Longer tails: a prefix of ``prefix_bound`` letters has
    more distinct factors than any word x y^ω with |x| + |y| up to a
    twentieth of the prefix can have.
    """
    if len(spec.tail) == 1:
        word = to_periodic(spec, bounds.word_cap)
        length = PERIODS_COMPARED * len(word.period)
        generated = generate_prefix(spec, length, bounds.word_cap)[:length]
        if generated != expand(word, length, bounds.word_cap):
            return _disagreement(
                PERIODICITY,
                spec,
                f"{word} over {length} letters",
                "a different prefix",
            )
        return _agreement(PERIODICITY)

    normalized, _ = normalize_letters(spec)
    family = match_family(normalized)
    if family is not None:
        return _disagreement(PERIODICITY, spec, "no family", str(family))
    prefix = generate_prefix(spec, bounds.prefix_bound, bounds.word_cap)
    prefix = prefix[: bounds.prefix_bound]
    window = max(1, len(prefix) // APERIODICITY_WINDOW_DIVISOR)
    if not refutes_eventual_period(prefix, window):
        return _disagreement(
            PERIODICITY,
            spec,
            f"more than {window} factors of length {window}",
            f"an eventual period within {window} letters",
        )
    return _agreement(PERIODICITY, Evidence.BOUNDED)


def check_spec(
    claim_id: str, spec: DirectiveSpec, bounds: SearchBounds
) -> VerificationReport:
    if claim_id == THEOREM_FAMILIES:
        return check_theorem_families(spec, bounds)
    if claim_id == PERIODICITY:
        return check_periodicity(spec, bounds)
    return check_unbalance_claim(claim_id, spec, bounds)


def check_chunk(
    claim_id: str, specs: Sequence[DirectiveSpec], bounds: SearchBounds
) -> VerificationReport:
    return merge_reports(
        claim_id, (check_spec(claim_id, spec, bounds) for spec in specs)
    )


def merge_reports(
    claim_id: str, reports: Iterable[VerificationReport]
) -> VerificationReport:
    return reduce(VerificationReport.merge, reports, VerificationReport(claim=claim_id))


class VerificationService:
    """Runs the claim checks over exhaustive enumerations.

    With more than one worker, the enumeration is split into contiguous
    chunks checked in a process pool.
    """

    def __init__(self, bounds: SearchBounds, workers: int = 1) -> None:
        if workers < 1:
            raise InputValidationError(f"workers must be positive, got {workers}")
        self._bounds = bounds
        self._workers = workers

    def verify(
        self,
        claim_id: str,
        cfg: EnumerationConfig,
        k_range: range = DEFAULT_FRAENKEL_K,
    ) -> VerificationReport:
        """Dispatch a claim identifier to its check."""
        if claim_id == THEOREM_FAMILIES:
            return self.verify_theorem_families(cfg)
        if claim_id == PERIODICITY:
            return self.verify_periodicity(cfg)
        if claim_id == FRAENKEL:
            return self.verify_fraenkel_episturmian(k_range, cfg)
        if claim_id in UNBALANCE_CLAIMS:
            return self.verify_unbalance_witnesses(claim_id, cfg)
        raise UnknownClaimError(claim_id, CLAIM_IDS)

    def verify_theorem_families(self, cfg: EnumerationConfig) -> VerificationReport:
        return self._run(THEOREM_FAMILIES, cfg)

    def verify_unbalance_witnesses(
        self, claim_id: str, cfg: EnumerationConfig
    ) -> VerificationReport:
        if claim_id not in UNBALANCE_CLAIMS:
            raise UnknownClaimError(claim_id, tuple(UNBALANCE_CLAIMS))
        return self._run(claim_id, cfg)

    def verify_periodicity(self, cfg: EnumerationConfig) -> VerificationReport:
        return self._run(PERIODICITY, cfg)

    def verify_fraenkel_episturmian(
        self, k_range: range, cfg: EnumerationConfig
    ) -> VerificationReport:
        """Unique balanced class with pairwise distinct frequencies, per k.

        For each k the closed form [Pal(12…k)]^ω must be balanced with the
        frequencies 2^(k−i)/(2^k−1); then every balanced spec over exactly k
        letters whose frequencies are pairwise distinct must generate a word
        in the same factor class.
        """
        if not k_range or k_range.start < 3:
            raise InputValidationError(
                f"the Fraenkel check needs k >= 3, got {list(k_range)}"
            )
        report = merge_reports(
            FRAENKEL, (self._fraenkel_for(k, cfg) for k in k_range)
        )
        logger.info("Checked %s: %s", FRAENKEL, _summary(report))
        return report

    def _fraenkel_for(self, k: int, cfg: EnumerationConfig) -> VerificationReport:
        word_cap = self._bounds.word_cap
        family = FamilyClass(variant=FamilyVariant.FAMILY_C, k=k)
        fraenkel = family_word(family, word_cap)
        closed = family_spec(family)

        reports = []
        balance = balance_check_periodic(fraenkel, word_cap)
        observed = frequencies(fraenkel)
        if balance.verdict != Verdict.BALANCED:
            reports.append(
                _disagreement(FRAENKEL, closed, "balanced", str(balance.witness))
            )
        elif observed != frequencies_closed_form(k):
            reports.append(
                _disagreement(FRAENKEL, closed, "2^(k-i)/(2^k-1)", str(observed))
            )
        else:
            reports.append(_agreement(FRAENKEL))

        target = canonical_class(fraenkel)
        widened = cfg.model_copy(
            update={
                "max_alphabet": max(cfg.max_alphabet, k),
                "tail_mode": TailMode.SINGLE_LETTER,
            }
        )
        found = 0
        for spec in enumerate_specs(widened):
            if len(spec.letters) != k:
                continue
            word = to_periodic(spec, word_cap)
            if len(set(frequencies(word).values())) != k:
                reports.append(_skipped(FRAENKEL))
                continue
            if balance_check_periodic(word, word_cap).verdict != Verdict.BALANCED:
                reports.append(_skipped(FRAENKEL))
                continue
            found += 1
            if canonical_class(word) == target:
                reports.append(_agreement(FRAENKEL))
            else:
                reports.append(
                    _disagreement(
                        FRAENKEL, spec, f"the class of {fraenkel}", str(word)
                    )
                )
        if found == 0:
            reports.append(
                _disagreement(
                    FRAENKEL,
                    f"k={k}",
                    "a balanced word with distinct frequencies",
                    "none within the enumeration bounds",
                )
            )
        logger.debug("Fraenkel k=%d: %d balanced distinct-frequency specs", k, found)
        return merge_reports(FRAENKEL, reports)

    def _bounds_for(self, cfg: EnumerationConfig) -> SearchBounds:
        """Service bounds with the witness-search prefix bound of ``cfg``."""
        if cfg.prefix_bound > self._bounds.word_cap:
            raise InputValidationError(
                f"prefix bound {cfg.prefix_bound} exceeds the word cap "
                f"{self._bounds.word_cap}"
            )
        return self._bounds.model_copy(update={"prefix_bound": cfg.prefix_bound})

    def _run(self, claim_id: str, cfg: EnumerationConfig) -> VerificationReport:
        bounds = self._bounds_for(cfg)
        specs = list(enumerate_specs(cfg))
        logger.info("Checking %s over %d specs", claim_id, len(specs))
        if self._workers == 1:
            report = check_chunk(claim_id, specs, bounds)
        else:
            size = -(-len(specs) // self._workers)
            chunks = [specs[i : i + size] for i in range(0, len(specs), size)]
            with ProcessPoolExecutor(max_workers=self._workers) as pool:
                report = merge_reports(
                    claim_id,
                    pool.map(
                        check_chunk, repeat(claim_id), chunks, repeat(bounds)
                    ),
                )
        logger.info("Checked %s: %s", claim_id, _summary(report))
        return report


def _summary(report: VerificationReport) -> str:
    return (
        f"{report.instances_checked} instances, {report.agreements} agree, "
        f"{len(report.disagreements)} disagree, {report.unknowns} unknown, "
        f"{report.skipped} skipped"
    )
