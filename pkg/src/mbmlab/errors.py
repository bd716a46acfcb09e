"""Exception types shared across the package."""


class MbmlabError(Exception):
    """Base class for domain errors raised by this package."""


class QuadratureError(MbmlabError):
    """An adaptive quadrature rule failed to reach tolerance in budget."""


class TableCoverageError(MbmlabError):
    """A kernel-table lookup fell outside the tabulated (t, theta) ranges."""


class InsufficientResolutionError(MbmlabError):
    """A path grid is too coarse for the requested oscillation scale."""


class WindowTooSmallError(MbmlabError):
    """A path grid does not cover the essential support of the dual kernel."""


class DomainError(MbmlabError):
    """Arguments violate a documented precondition."""
