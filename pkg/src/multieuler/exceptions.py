"""Exception hierarchy shared by all modules."""


class EulerError(Exception):
    """Base class for every domain error raised by the package."""


class GraphError(EulerError, ValueError):
    """Invalid graph construction or invalid argument."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class TrivialGraphError(EulerError):
    """The graph has no edges, so no Eulerian verdict applies."""


class NotCircuitEulerianError(EulerError):
    def __init__(self, classification):
        super().__init__(f"graph is not circuit-Eulerian ({classification})")
        self.classification = classification


class NotPathEulerianError(EulerError):
    def __init__(self, classification):
        super().__init__(f"graph is not path-Eulerian ({classification})")
        self.classification = classification


class MalformedTrailError(EulerError):
    """A trail does not have the shape an operation requires."""


class TooLargeError(EulerError):
    """Requested computation exceeds a configured size guard."""
