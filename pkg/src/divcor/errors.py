"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI:
    DomainError     -> 1   (bad arguments, precondition violations)
    BudgetError     -> 2   (enumeration / memory / digit budgets)
    InvariantError  -> 3   (internal consistency failure; a bug)
    usage errors    -> 64  (malformed flags, handled by the CLI parser)
"""


class DivcorError(Exception):
    """Base class for all package errors."""


class DomainError(DivcorError):
    """Argument outside an operation's contract (domain or precondition)."""

    exit_code = 1


class PoleError(DomainError):
    """Evaluation requested at or too close to a pole."""


class RankDeficiencyError(DomainError):
    """Fit design matrix is rank deficient or the sample set is degenerate."""


class BudgetError(DivcorError):
    """A configured resource budget would be exceeded."""

    exit_code = 2


class InvariantError(DivcorError):
    """An internal invariant failed; indicates a bug, not a user error."""

    exit_code = 3
