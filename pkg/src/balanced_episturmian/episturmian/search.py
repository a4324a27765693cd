"""Balance of the word generated by a directive spec."""

import logging

from balanced_episturmian.episturmian.directive import generate_prefix, to_periodic
from balanced_episturmian.exceptions import InputValidationError
from balanced_episturmian.models import BalanceReport, DirectiveSpec, Verdict
from balanced_episturmian.words.balance import WindowCounter, balance_check_periodic
from balanced_episturmian.words.basic import DEFAULT_WORD_CAP

logger = logging.getLogger(__name__)

DEFAULT_PREFIX_BOUND = 10_000
DEFAULT_MIN_PREFIX = 64


def witness_search(
    spec: DirectiveSpec,
    prefix_bound: int = DEFAULT_PREFIX_BOUND,
    min_prefix: int = DEFAULT_MIN_PREFIX,
    word_cap: int = DEFAULT_WORD_CAP,
) -> BalanceReport:
    """Look for an unbalance witness in prefixes of doubling length.

    Each round checks factor lengths up to half the prefix. Balance of an
    aperiodic word cannot be established this way, so a fruitless search ends
    ``INCONCLUSIVE``.
    """
    if spec.is_finite:
        raise InputValidationError(f"{spec} is a finite directive word")
    length = min(min_prefix, prefix_bound)
    while True:
        prefix = generate_prefix(spec, length, word_cap)[:prefix_bound]
        max_n = len(prefix) // 2
        witness = WindowCounter(prefix).first_witness(range(1, max_n + 1))
        if witness is not None:
            logger.debug("Witness for %s in a %d-letter prefix", spec, len(prefix))
            return BalanceReport(
                verdict=Verdict.UNBALANCED,
                witness=witness,
                checked_lengths=(1, witness.length),
            )
        if len(prefix) >= prefix_bound:
            logger.info(
                "No witness for %s within %d letters; verdict left open",
                spec,
                prefix_bound,
            )
            return BalanceReport(
                verdict=Verdict.INCONCLUSIVE,
                checked_lengths=(1, max_n),
                exact=False,
            )
        logger.debug("No witness for %s in %d letters, doubling", spec, len(prefix))
        length = min(2 * len(prefix), prefix_bound)


def balance_of_spec(
    spec: DirectiveSpec,
    prefix_bound: int = DEFAULT_PREFIX_BOUND,
    min_prefix: int = DEFAULT_MIN_PREFIX,
    word_cap: int = DEFAULT_WORD_CAP,
) -> BalanceReport:
    """Exact verdict for single-letter tails, bounded witness search otherwise."""
    if len(spec.tail) == 1:
        return balance_check_periodic(to_periodic(spec, word_cap), word_cap)
    return witness_search(spec, prefix_bound, min_prefix, word_cap)
