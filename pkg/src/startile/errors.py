"""Exception types shared across the engine."""

from __future__ import annotations


class StartileError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(StartileError):
    """A value lies outside the documented domain of an operation."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class NoSpecialCircle(StartileError):
    """Special-point lookup on a pattern that has no special circle."""


class DegenerateLine(StartileError):
    """The reference line passes through the pattern center (or collapses)."""


class ParallelRay(StartileError):
    """A marked-point ray never meets the reference line."""


class DegenerateTriple(StartileError):
    """Circle centers do not form the expected tangent arrangement."""


class MotifCapExceeded(StartileError):
    """rows * cols exceeds the configured motif cap."""


class EmptyPattern(StartileError):
    """Rendering was requested for an empty segment set."""


class ConfigSyntaxError(StartileError):
    """A config document could not be read (bad line, unknown or missing key)."""

    def __init__(self, reason: str, line: int | None = None, key: str | None = None):
        super().__init__(f"line {line}: {reason}" if line is not None else reason)
        self.reason = reason
        self.line = line
        self.key = key


class ValidationError(StartileError):
    """A config violates a pattern or tiling invariant; ``field`` names the key."""

    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason
