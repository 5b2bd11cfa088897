"""Exception hierarchy shared across the package."""


class MetricVoteError(Exception):
    """Base class for all errors raised by this package."""


class EmptyApprovalError(MetricVoteError):
    """A voter's acceptability ball contains no candidate."""

    def __init__(self, voter: int, detail: str = ""):
        self.voter = voter
        message = f"voter {voter} approves no candidate"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class SizeGuardError(MetricVoteError):
    """An enumeration would exceed the configured size limit."""


class DivisibilityError(MetricVoteError):
    """A generator received a voter count that violates its congruence."""


class PreconditionError(MetricVoteError):
    """An operation's precondition does not hold for the given arguments."""


class InternalInconsistencyError(MetricVoteError):
    """An invariant that should hold by construction was violated."""


class ParseError(MetricVoteError):
    """An instance file could not be parsed."""

    def __init__(self, message: str, field: str = ""):
        self.field = field
        super().__init__(f"{message} (field: {field})" if field else message)
