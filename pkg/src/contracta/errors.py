"""Exception types raised across the package."""


class ContractaError(Exception):
    """Base class for all errors raised by contracta."""


class OutOfRange(ContractaError, IndexError):
    """A vertex id or vertex-set bit lies outside ``0..n-1``."""


class NonEdge(ContractaError, ValueError):
    """An operation needed an edge but got a non-adjacent pair."""


class MalformedSpec(ContractaError, ValueError):
    """A split specification whose two sides do not cover the neighborhood."""


class BadWitness(ContractaError, ValueError):
    """A vertex set that does not induce the graph it was claimed to induce."""


class LimitExceeded(ContractaError, RuntimeError):
    """A request beyond the sizes this package is willing to search."""


class NotFree(ContractaError, ValueError):
    """A predicate that requires an H-free input received an H-exist graph."""


class UnknownId(ContractaError, KeyError):
    """A catalog lookup for an id that does not exist."""


class BadOrder(ContractaError, ValueError):
    """A parametric graph requested with an invalid order."""


class MalformedGraph6(ContractaError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedEdgeList(ContractaError, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line
