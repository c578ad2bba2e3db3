"""Exception hierarchy shared by all degdev modules."""


class GraphError(ValueError):
    """Invalid graph data or an operation applied outside its domain."""


class EdgeListError(GraphError):
    """Base class for edge-list parse failures.

    ``line`` is the 1-based line number in the source text, when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HeaderError(EdgeListError):
    pass


class EdgeCountError(EdgeListError):
    pass


class VertexRangeError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class BipartiteViolationError(EdgeListError):
    pass


class LayoutError(GraphError):
    """A bipartite layout does not fit the graph it is used with."""


class PreconditionError(ValueError):
    """Input violates an algorithm's stated precondition."""


class SizeError(ValueError):
    """Input is larger than a configured enumeration cap."""


class ConvergenceError(RuntimeError):
    """The eigensolver hit its sweep cap before converging."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class AlgorithmInvariantError(RuntimeError):
    """An internal step of a regularization algorithm found no legal move.

    This never happens on valid input; it signals a bug.
    """
