"""Exception types raised across the package."""


class IndsetError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(IndsetError, ValueError):
    pass


class GraphParseError(IndsetError, ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CapacityError(IndsetError):
    def __init__(self, n, cap):
        super().__init__(
            f"graph has {n} vertices, above the enumeration cap of {cap} "
            "(raise it with cap=... or INDSET_ENUM_CAP)"
        )
        self.n = n
        self.cap = cap


class NotApplicable(IndsetError):
    """A bound does not apply to the given graph (e.g. Kahn on an irregular graph)."""


class PreconditionError(IndsetError, ValueError):
    pass


class IsolatedVerticesError(PreconditionError):
    def __init__(self, vertices):
        self.vertices = sorted(vertices)
        super().__init__(f"graph has isolated vertices: {self.vertices}")


class NotBipartiteError(PreconditionError):
    pass


class InternalInvariantError(IndsetError, AssertionError):
    pass
