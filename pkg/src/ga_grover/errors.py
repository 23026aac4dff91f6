"""Exception types raised across the package."""


class GroverError(ValueError):
    """Base class for all input and feasibility errors."""


class InvalidInputError(GroverError):
    """An argument violates an operation's precondition."""


class DegenerateSearchError(GroverError):
    """The search has no solutions or only solutions (M = 0 or M = N)."""


class InfeasiblePhaseError(GroverError):
    """No real oracle phase makes the requested iteration count exact."""

    def __init__(self, message, minimal_k):
        super().__init__(message)
        self.minimal_k = minimal_k


class TrajectoryCheckError(GroverError):
    """Stepwise and closed-form trajectories disagree beyond tolerance."""
