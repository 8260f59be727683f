"""Exception hierarchy.

Every domain error derives from :class:`LBError`, so callers (the CLI in
particular) can separate domain failures from programming errors.
"""


class LBError(Exception):
    """Base class for all domain errors raised by the package."""


class MalformedWord(LBError, ValueError):
    """Unbalanced or ill-nested parentheses word."""


class IllegalCharacter(LBError, ValueError):
    """A forest literal contained something other than parentheses."""


class NotATree(LBError, ValueError):
    """An operation that needs exactly one top-level tree got a forest."""


class EmptyForest(LBError, ValueError):
    pass


class OrderMismatch(LBError, ValueError):
    """Operands carry different truncation orders."""


class BadConstantTerm(LBError, ValueError):
    """The coefficient of the empty forest is not what the operation needs."""


class NotInfinitesimal(LBError, ValueError):
    pass


class NotConsistent(LBError, ValueError):
    pass


class NoSolution(LBError, ValueError):
    pass


class BadRepresentation(LBError, ValueError):
    """A series does not satisfy the invariant of its flow representation."""
