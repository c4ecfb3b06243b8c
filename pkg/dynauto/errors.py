"""Exception hierarchy for dynauto.

Every error raised on purpose by the library derives from DynautoError so the
CLI can map it to an exit status without catching unrelated failures.
"""

from __future__ import annotations


class DynautoError(Exception):
    """Base class for all library errors."""


class ConfigError(DynautoError):
    """Invalid option combination or configuration value."""


class FormulaSyntaxError(DynautoError):
    """Lexing or parsing failure, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int,
                 expected: frozenset[str] | set[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"{line}:{column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)
        self.reason = message


class ReservedAtomError(FormulaSyntaxError):
    """The reserved proposition `last` appeared in user input."""


class TraceError(DynautoError):
    """A trace violates its invariants (empty, alphabet mismatch, index)."""


class TraceFormatError(TraceError):
    """Malformed serialized trace."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        prefix = f"{line}:{column}: " if line else ""
        super().__init__(prefix + message)


class AlphabetTooLargeError(TraceError):
    """Enumeration requested over an alphabet above the configured cap."""


class ResourceLimitError(DynautoError):
    """A construction or search exceeded its configured bound."""


class FactFormatError(DynautoError):
    """Malformed ASP fact text."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class DotFormatError(DynautoError):
    """DOT text outside the supported subset."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class UnassignedVariableError(DynautoError):
    """An MSO formula was evaluated with a free variable left unassigned."""
