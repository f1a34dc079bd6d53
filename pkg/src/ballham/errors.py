"""Exception types shared across the package, with their CLI exit codes.

Exit-code contract: 0 success, 2 not a class member, 3 search budget
exhausted, 4 bad input, 5 internal contradiction.  Code 5 marks a situation
that a proved structural theorem rules out; it must never occur on valid
inputs and is treated as a test-failure signal, not a user error.
"""

EXIT_OK = 0
EXIT_NOT_MEMBER = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4
EXIT_CONTRADICTION = 5


class GraphInputError(ValueError):
    """Malformed or out-of-contract input (bad vertex id, parse error, ...)."""


class ParseError(GraphInputError):
    """Serialization parse failure; carries the byte offset of the defect."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class PreconditionError(GraphInputError):
    """A documented operation precondition does not hold for the input."""


class NotMemberError(PreconditionError):
    """The input graph is outside the degree-bounded class an operation needs."""


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its node budget before deciding."""


class InternalContradictionError(RuntimeError):
    """Observed structure contradicts a theorem that the inputs satisfy."""


def exit_code_for(exc):
    if isinstance(exc, NotMemberError):
        return EXIT_NOT_MEMBER
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, InternalContradictionError):
        return EXIT_CONTRADICTION
    if isinstance(exc, (GraphInputError, ValueError)):
        return EXIT_INPUT
    raise exc
