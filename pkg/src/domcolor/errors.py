"""Exception hierarchy shared across the package."""


class DomColorError(Exception):
    """Base class for every error raised by domcolor."""


class ParseError(DomColorError, ValueError):
    """Input text could not be decoded into a graph."""


class Graph6HeaderError(ParseError):
    pass


class Graph6TruncatedError(ParseError):
    pass


class Graph6CharacterError(ParseError):
    pass


class EdgeListError(ParseError):
    pass


class GraphError(DomColorError, ValueError):
    """Structurally invalid graph or argument (bad vertex, bad root, bad size)."""


class UndefinedInvariantError(DomColorError):
    """The requested invariant is not defined on this graph (e.g. isolated vertex)."""


class BudgetExceededError(DomColorError):
    """A search ran past its node budget; no answer is claimed."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: search budget of {budget} nodes exceeded")
        self.what = what
        self.budget = budget


class ConfigError(DomColorError, ValueError):
    """Unknown theorem id, family name or invalid suite configuration."""
