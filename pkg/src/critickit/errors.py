"""Exception types shared across the package."""

from __future__ import annotations


class CritickitError(Exception):
    """Base class for all critickit errors."""


class GraphError(CritickitError, ValueError):
    """Invalid graph construction or graph-level precondition failure."""


class DisconnectedError(GraphError):
    """An operation requiring a connected graph received a disconnected one.

    ``components`` holds two witness components (vertex lists).
    """

    def __init__(self, message: str, components: tuple[list[int], list[int]]):
        super().__init__(message)
        self.components = components


class Graph6Error(CritickitError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class AssignmentError(CritickitError, ValueError):
    """Invalid list assignment or block system."""


class CoverError(CritickitError, ValueError):
    """Invalid cover or cover-level precondition failure."""


class BudgetExceeded(CritickitError, RuntimeError):
    """A bounded search ran out of budget before reaching a decision.

    Carries how much work was accounted (``spent``) plus optional context
    set by the operation that gave up (e.g. ``lower_bound`` for a chromatic
    number search, ``best_upper_bound`` for a minimization).
    """

    def __init__(self, message: str, spent: int, **context):
        super().__init__(message)
        self.spent = spent
        for key, value in context.items():
            setattr(self, key, value)
