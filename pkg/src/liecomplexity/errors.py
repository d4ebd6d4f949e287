"""Exception hierarchy shared by the library and the command line."""


class LieComplexityError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1
    kind = "error"


class SpecParseError(LieComplexityError, ValueError):
    exit_code = 2
    kind = "parse"


class DigitsExhausted(LieComplexityError, ValueError):
    """A finite continued fraction ran out of partial quotients."""

    exit_code = 3
    kind = "digits_exhausted"


class NotNormalizedError(LieComplexityError, ValueError):
    exit_code = 2
    kind = "not_normalized"


class SaturationError(LieComplexityError, RuntimeError):
    """A Sturmian prefix hit the cap before showing all n + 1 factors."""

    exit_code = 4
    kind = "saturation_failed"


class MethodDisagreement(LieComplexityError, AssertionError):
    exit_code = 5
    kind = "method_disagreement"


class VerificationFailure(LieComplexityError, AssertionError):
    exit_code = 5
    kind = "verification_failed"
