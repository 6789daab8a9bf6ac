"""Exception hierarchy shared by all modules."""


class YBError(Exception):
    """Base class for all library errors."""


class RangeError(YBError, ValueError):
    """An element or table entry lies outside 1..n."""


class SizeError(YBError, ValueError):
    """Objects of different sizes were combined."""


class PreconditionError(YBError):
    """A mathematical precondition (non-degeneracy, reflection equation, ...) fails."""


class ResourceError(YBError):
    """The requested computation exceeds its configured budget."""


class ParseError(YBError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
