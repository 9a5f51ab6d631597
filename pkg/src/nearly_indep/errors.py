"""Exception hierarchy shared by every module."""

from __future__ import annotations


class NearlyIndepError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NearlyIndepError, ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(NearlyIndepError):
    """A graph would exceed the supported order."""


class GuardError(NearlyIndepError):
    """A computation was refused because it exceeds a runtime guard."""

    def __init__(self, message: str, guard: str):
        super().__init__(message)
        self.guard = guard


class ParseError(DomainError):
    """Malformed input. Carries the byte offset or line number when known."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line
