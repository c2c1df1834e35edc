"""Exception hierarchy shared by every module.

Errors that carry a certificate expose it as ``.witness`` so callers (and the
CLI) can print something checkable instead of a bare message.
"""

from __future__ import annotations

from typing import Any


class OddwheelError(Exception):
    """Base class for all package errors."""


class InputError(OddwheelError, ValueError):
    """The caller handed us data that violates a documented precondition."""


class OutOfRange(InputError):
    pass


class SelfLoop(InputError):
    pass


class EmptySet(InputError):
    pass


class BadLength(InputError):
    pass


class TooSmall(InputError):
    pass


class Overlap(InputError):
    pass


class NotSubset(InputError):
    pass


class LengthOutOfRange(InputError):
    pass


class NotHedgehog(InputError):
    pass


class BadSize(InputError):
    pass


class BadParams(InputError):
    pass


class BadSeed(InputError):
    pass


class NotAPartition(InputError):
    pass


class Malformed(InputError):
    """Unparseable coloring document; ``position`` is a character offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at char {position})")
        self.position = position


class NotCovered(OddwheelError, LookupError):
    """No tabulated value or construction applies to the requested pair."""


class BudgetExceeded(OddwheelError):
    def __init__(self, message: str = "search budget exhausted", nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class WitnessError(OddwheelError):
    """An error that carries a certificate (``witness`` may be None)."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolated(WitnessError):
    pass


class InternalContradiction(WitnessError):
    """``branch`` names the decomposition case that was running, if any."""

    def __init__(self, message: str, witness: Any = None, branch: str | None = None):
        super().__init__(message, witness)
        self.branch = branch


class NoSplit(WitnessError):
    pass


class HypothesisViolated(WitnessError):
    def __init__(self, which: str, message: str, witness: Any = None):
        super().__init__(f"hypothesis {which} failed: {message}", witness)
        self.which = which
