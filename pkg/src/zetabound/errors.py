"""Exception hierarchy shared by every module."""


class ZetaBoundError(Exception):
    """Base class for all package errors."""


class DomainError(ZetaBoundError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class NotFoundError(ZetaBoundError, LookupError):
    """A search (root, sign change, feasible point) found nothing."""


class ResourceError(ZetaBoundError, RuntimeError):
    """A cost guard refused the requested computation."""
