"""Exception types.  Each carries the CLI exit code it maps to."""

from __future__ import annotations


class CabError(Exception):
    exit_code = 3


class ParseError(CabError, ValueError):
    """Malformed input file; ``line`` is 1-based when known."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class CurveError(CabError, ValueError):
    """A polynomial failed the C_ab conditions; ``condition`` names which one."""

    def __init__(self, message: str, condition: str):
        self.condition = condition
        super().__init__(f"{condition}: {message}")


class CodeError(CabError, ValueError):
    """Invalid code parameters (order out of range, points off the curve, ...)."""


class NotACodewordError(CabError, ValueError):
    """The received word is not in the code."""


class ReducePreconditionError(CabError, ValueError):
    """Input to reduce exceeds the degree bounds the division relies on."""


class MissingGroebnerBasisError(CabError, RuntimeError):
    """General-path unencoding needs a precomputed Groebner basis."""

    exit_code = 1
