"""Exception hierarchy shared by every module of the package."""


class HFError(Exception):
    """Base class for all errors raised by hfset."""


class ResourceLimitError(HFError):
    """A configured size, rank, fuel or output limit would be exceeded."""


class PreconditionError(HFError):
    """An operation was called outside its documented precondition."""


class InvalidTagError(HFError, ValueError):
    pass


class DuplicateTagError(HFError, ValueError):
    pass


class CompositionError(HFError):
    """Raised when two morphisms are not composable."""


class UnboundIdentifierError(HFError, NameError):
    pass


class UnknownSuiteError(HFError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown suite"


class ParseError(HFError):
    def __init__(self, message, line, column, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        super().__init__(str(self))

    def __str__(self):
        text = f"{self.line}:{self.column}: {self.message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        return text
