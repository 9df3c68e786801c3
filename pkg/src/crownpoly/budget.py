"""Step-count budgets for the exhaustive enumerations.

Budgets count elementary steps rather than wall-clock time so that a run
either always finishes or always aborts at the same point.
"""

from __future__ import annotations

import os

from .errors import DomainError, ResourceError

DEFAULT_BUDGET = 10**9
ENV_VAR = "CROWNPOLY_BUDGET"

# largest poset for which linear extensions / order ideals are listed explicitly
DEFAULT_ENUMERATION_BOUND = 12


def default_budget() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise DomainError(f"{ENV_VAR} must be positive, got {value}")
    return value


class Budget:
    """A mutable counter of remaining elementary steps."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        if self.limit <= 0:
            raise DomainError("budget must be positive")
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise ResourceError(
                f"step budget of {self.limit} exhausted"
            )

    def affords(self, steps: int) -> bool:
        return self.used + steps <= self.limit

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
