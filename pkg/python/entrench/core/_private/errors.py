"""Exceptions raised by the entrench library.

Errors that refine a builtin error also derive from it, so callers that
only know about ValueError or KeyError keep working.
"""
from typing import Optional


class EntrenchError(Exception):
    """Base class of every error raised on purpose by entrench."""


class FormulaSyntaxError(EntrenchError, ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.line = text.count("\n", 0, position) + 1
        self.column = position - (text.rfind("\n", 0, position) + 1) + 1
        self.reason = reason
        super(FormulaSyntaxError, self).__init__(
            "Syntax error at line {}, column {}: {}".format(
                self.line, self.column, reason))


class UnknownAtomError(EntrenchError, ValueError):
    def __init__(self, name: str, position: Optional[int] = None):
        self.name = name
        self.position = position
        where = "" if position is None else " at position {}".format(position)
        super(UnknownAtomError, self).__init__(
            "Unknown atom '{}'{}".format(name, where))


class UniverseMismatchError(EntrenchError, ValueError):
    pass


class UniverseTooLargeError(EntrenchError, ValueError):
    pass


class UnknownRuleError(EntrenchError, ValueError):
    def __init__(self, name: str):
        self.name = name
        super(UnknownRuleError, self).__init__(
            "Unknown rule '{}'".format(name))


class UnknownProfileError(EntrenchError, ValueError):
    def __init__(self, name: str):
        self.name = name
        super(UnknownProfileError, self).__init__(
            "Unknown profile '{}'".format(name))


class ProfileError(EntrenchError, ValueError):
    pass


class TheoryFileError(EntrenchError):
    def __init__(self, path: str, line: Optional[int], reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        if line is None:
            message = "{}: {}".format(path, reason)
        else:
            message = "{}:{}: {}".format(path, line, reason)
        super(TheoryFileError, self).__init__(message)


class UnknownSuiteError(EntrenchError, KeyError):
    def __init__(self, name: str):
        self.name = name
        super(UnknownSuiteError, self).__init__(name)

    def __str__(self):
        return "Unknown verification suite '{}'".format(self.name)
