"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Base class for invalid-graph conditions."""


class OutOfRange(GraphError):
    pass


class Loop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    """Raised when an operation needs a connected graph.

    ``witness`` holds two vertices lying in different components.
    """

    def __init__(self, u, w):
        super().__init__(f"graph is disconnected: vertices {u} and {w} are in different components")
        self.witness = (u, w)


class TooSmall(GraphError):
    pass


class NotATree(GraphError):
    pass


class EqualVertices(ValueError):
    pass


class EqualEdges(ValueError):
    pass


class WeightOutOfRange(ValueError):
    pass


class EmptyRow(ValueError):
    pass


class BadParameter(ValueError):
    pass


class UnknownForm(LookupError):
    pass


class ParseError(ValueError):
    pass
