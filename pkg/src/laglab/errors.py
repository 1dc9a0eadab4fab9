"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An operation was called with arguments outside its contract."""


class PreconditionError(ValueError):
    """A structural precondition failed (e.g. gluing a covered pair)."""


class DegenerateStartError(RuntimeError):
    """Ascent started at a point where the weight polynomial vanishes."""


class ParseError(ValueError):
    """A hypergraph file was rejected; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BudgetExceededError(RuntimeError):
    """Exhaustive search aborted; carries partial progress."""

    def __init__(self, message: str, *, r: int, m: int, n_cap: int,
                 budget: int, graphs_enumerated: int, best_partial=None):
        super().__init__(message)
        self.r = r
        self.m = m
        self.n_cap = n_cap
        self.budget = budget
        self.graphs_enumerated = graphs_enumerated
        self.best_partial = best_partial
