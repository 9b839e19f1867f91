"""Exception hierarchy for the eqdim package."""


class EqdimError(Exception):
    """Base class for all package errors."""


class GraphError(EqdimError, ValueError):
    pass


class UnknownVertex(GraphError):
    def __init__(self, name):
        super().__init__(f"unknown vertex {name!r}")
        self.name = name


class SelfLoop(GraphError):
    def __init__(self, name):
        super().__init__(f"self-loop on vertex {name!r}")
        self.name = name


class DuplicateVertex(GraphError):
    def __init__(self, name):
        super().__init__(f"duplicate vertex name {name!r}")
        self.name = name


class Disconnected(GraphError):
    def __init__(self, unreachable):
        super().__init__(f"graph is disconnected; unreachable from first vertex: {unreachable!r}")
        self.unreachable = unreachable


class SameVertex(EqdimError, ValueError):
    def __init__(self, u):
        super().__init__(f"pair needs two distinct vertices, got {u!r} twice")
        self.vertex = u


class SizeCapExceeded(EqdimError):
    def __init__(self, what, n, cap):
        super().__init__(f"{what}: {n} vertices exceeds the configured cap of {cap}")
        self.n = n
        self.cap = cap


class NTooSmall(EqdimError, ValueError):
    def __init__(self, n, minimum):
        super().__init__(f"n={n} is below the minimum of {minimum}")
        self.n = n
        self.minimum = minimum


class ParityMismatch(EqdimError, ValueError):
    def __init__(self, claim, n):
        super().__init__(f"claim {claim!r} does not apply to n={n} (parity)")
        self.claim = claim
        self.n = n


class BudgetExceeded(EqdimError):
    """The exact solver ran out of time or nodes.

    ``partial`` holds a :class:`~eqdim.solver.SolveResult` with the best
    incumbent found and the proven ``[lower, upper]`` interval.
    """

    def __init__(self, partial):
        super().__init__(
            f"solver budget exhausted; eqdim in [{partial.lower}, {partial.upper}]"
        )
        self.partial = partial
