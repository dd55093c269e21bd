"""Exception hierarchy shared by every module.

All domain errors derive from :class:`DomainError` so the CLI can map them
to exit status 1 with a single-line reason.
"""


class DomainError(Exception):
    """Base class for recoverable, user-facing errors."""


class OutOfRange(DomainError):
    pass


class DuplicateEdge(DomainError):
    pass


class LoopEdge(DomainError):
    pass


class MalformedGraph6(DomainError):
    pass


class MalformedEdgeList(DomainError):
    pass


class TruncatedSpectrum(DomainError):
    pass


class ChordEndpointsAdjacent(DomainError):
    pass


class NoEdgeIntersection(DomainError):
    pass


class MultipleIntersections(DomainError):
    pass


class TypeNotInFamily(DomainError):
    pass


class DepthTooLarge(DomainError):
    pass


class NotEuler(DomainError):
    pass


class InconsistentXi(DomainError):
    pass


class MissingLabel(DomainError):
    pass


class OrderTooLarge(DomainError):
    pass


class UnknownName(DomainError):
    pass


class BaseHasPendant(DomainError):
    pass


class NotATree(DomainError):
    pass
