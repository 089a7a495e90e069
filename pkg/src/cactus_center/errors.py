"""Exception types raised across the package."""


class CactusError(Exception):
    """Base class for all errors raised by this package."""


class BadVertexId(CactusError):
    pass


class NonpositiveEdgeLength(CactusError):
    pass


class NotConnected(CactusError):
    pass


class NotACactus(CactusError):
    pass


class IndexOutOfRange(CactusError, IndexError):
    pass


class NotVertexConstrained(CactusError):
    pass


class NotAnArticulation(CactusError):
    pass


class NotABlockNode(CactusError):
    pass


class NotAHingeNode(CactusError):
    pass


class EmptySubtree(CactusError):
    pass


class NotACycle(CactusError):
    pass


class NotATree(CactusError):
    pass


class NotANode(CactusError):
    pass


class UnmappablePoint(CactusError):
    pass


class InvalidInstance(CactusError):
    def __init__(self, report):
        super().__init__(f"invalid instance: {report.summary()}")
        self.report = report


class InternalInconsistency(CactusError):
    pass


class InfeasibleParams(CactusError):
    pass
