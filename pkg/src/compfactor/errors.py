"""Exception types shared across the package."""


class GraphError(ValueError):
    pass


class InvalidVertex(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class InvalidOrder(GraphError):
    pass


class InvalidParameters(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class FormatError(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class TooLarge(GraphError):
    """Input exceeds the exhaustive-search cap of an operation."""


class CatalogTooSmall(GraphError):
    pass


class InvalidPartition(GraphError):
    pass


class NumericError(ArithmeticError):
    pass


class ConvergenceError(ArithmeticError):
    pass
