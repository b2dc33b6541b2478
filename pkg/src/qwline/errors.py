"""Exception hierarchy shared by all qwline modules."""


class QwlineError(Exception):
    """Base class for all errors raised by this package."""


class NormalizationError(QwlineError):
    """A coin or spinor violates its unit-norm constraint."""


class DegenerateCoinError(QwlineError):
    """An operation that requires a*b != 0 received a degenerate coin."""


class NotDegenerateError(QwlineError):
    """A closed-form degenerate distribution was requested for a generic coin."""


class DomainError(QwlineError):
    """A scalar argument lies outside the domain of the requested quantity."""


class RegionError(QwlineError):
    """An estimator was applied to a site outside the region it models."""


class ResourceError(QwlineError):
    """A run would exceed a configured resource cap."""


class UnderflowError(QwlineError):
    """An exact probability is too small for double-precision log extraction."""
