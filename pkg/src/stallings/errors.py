class StallingsError(Exception):
    """Base class for errors raised by this package."""


class AlphabetError(StallingsError, ValueError):
    pass


class ParseError(StallingsError, ValueError):
    """Malformed word or subgroup file; carries 1-based line/column."""

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


class EmptyPresentation(StallingsError, ValueError):
    pass


class NotStronglyConnected(StallingsError):
    pass


class ClassCountUnavailable(StallingsError):
    """Degree-3 class counts are only defined over a rank-2 alphabet."""


class TrivialFolding(StallingsError):
    pass


class NoDecomposition(StallingsError):
    """The folding has no directed trail decomposition.

    ``sources`` and ``sinks`` list the offending vertices when the obstruction
    is a source or sink; ``reason`` is a one-line human readable account.
    """

    def __init__(self, reason, sources=(), sinks=()):
        self.reason = reason
        self.sources = tuple(sources)
        self.sinks = tuple(sinks)
        super().__init__(reason)
