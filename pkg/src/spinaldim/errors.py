"""Shared exception types."""


class BudgetExceeded(RuntimeError):
    """A computation was refused because it would blow a configured budget.

    Carries enough context to tell the caller what to do instead (use the
    log variant, lower the horizon, raise the cap).
    """

    def __init__(self, message, *, required=None, limit=None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class DegreeCapExceeded(BudgetExceeded):
    """A permutation action would exceed the configured degree cap."""
