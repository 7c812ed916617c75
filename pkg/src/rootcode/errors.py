class RootcodeError(Exception):
    """Base class for data errors raised by this package."""


class MalformedCode(RootcodeError, ValueError):
    pass


class LineError(RootcodeError):
    """An error tied to one line of an input file."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MalformedLine(LineError):
    pass


class DuplicateRule(LineError):
    pass


class UnknownTenseToken(LineError):
    pass


class DuplicateEntry(LineError):
    pass


class MalformedGoldLine(LineError):
    pass


class MalformedClause(RootcodeError):
    pass


class NotAVerb(RootcodeError):
    pass


NoRuleMatched = NotAVerb


class AmbiguousRule(RootcodeError):
    pass


class NoRuleForFeatures(RootcodeError):
    pass


class NoMapping(RootcodeError):
    pass


class MultipleVerbs(RootcodeError):
    pass


class DuplicateDocId(RootcodeError):
    pass
