"""Services module: enumeration and claim verification."""

from balanced_episturmian.services.claims import CLAIM_IDS, UNBALANCE_CLAIMS
from balanced_episturmian.services.enumeration import enumerate_specs
from balanced_episturmian.services.verification import VerificationService

__all__ = ["CLAIM_IDS", "UNBALANCE_CLAIMS", "VerificationService", "enumerate_specs"]
