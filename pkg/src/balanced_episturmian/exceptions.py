"""Custom exceptions for the application."""

from collections.abc import Sequence


class BusinessError(Exception):
    """Base exception for application-specific errors."""

    def __init__(
        self,
        message: str,
        error_code: str = "BUSINESS_ERROR",
        exit_code: int = 3,
    ) -> None:
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        super().__init__(self.message)


class InputValidationError(BusinessError):
    """Raised when an operation's precondition is violated."""

    def __init__(self, message: str) -> None:
        super().__init__(
            message=message,
            error_code="INPUT_VALIDATION_ERROR",
            exit_code=3,
        )


class WordParseError(BusinessError):
    """Raised when word or directive text cannot be parsed."""

    def __init__(self, message: str, token: str, position: int) -> None:
        self.token = token
        self.position = position
        super().__init__(
            message=f"{message}: {token!r} at position {position}",
            error_code="WORD_PARSE_ERROR",
            exit_code=3,
        )


class DirectiveExhaustedError(BusinessError):
    """Raised when a finite directive word cannot produce the requested prefix."""

    def __init__(self, message: str) -> None:
        super().__init__(
            message=message,
            error_code="DIRECTIVE_EXHAUSTED",
            exit_code=3,
        )


class AperiodicSpecError(BusinessError):
    """Raised when a periodic form is requested for an aperiodic directive spec."""

    def __init__(self, spec_text: str) -> None:
        super().__init__(
            message=(
                f"Directive spec {spec_text!r} has a tail period of length >= 2; "
                "a standard episturmian word is ultimately periodic only when its "
                "directive sequence has the form w·a^ω"
            ),
            error_code="APERIODIC_SPEC",
            exit_code=3,
        )


class ResourceLimitError(BusinessError):
    """Raised when an operation would materialise a word beyond the size guard."""

    def __init__(self, requested: int, cap: int) -> None:
        self.requested = requested
        self.cap = cap
        super().__init__(
            message=f"Word of {requested:,} letters exceeds the cap of {cap:,}",
            error_code="RESOURCE_LIMIT_ERROR",
            exit_code=4,
        )


class UnknownClaimError(BusinessError):
    """Raised when the verifier is asked for a claim it does not know."""

    def __init__(self, claim: str, known: Sequence[str]) -> None:
        super().__init__(
            message=f"Unknown claim {claim!r}; expected one of: {', '.join(known)}",
            error_code="UNKNOWN_CLAIM",
            exit_code=3,
        )


class ConfigurationError(BusinessError):
    """Raised when configuration is invalid or missing."""

    def __init__(self, message: str) -> None:
        super().__init__(
            message=message,
            error_code="CONFIGURATION_ERROR",
            exit_code=5,
        )
