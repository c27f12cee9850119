"""Exception types raised across the package."""


class WalkError(ValueError):
    """Base class for all domain errors raised by walkextremes."""


class InvalidParams(WalkError):
    pass


class TooLarge(WalkError):
    """A cost guard was exceeded (enumeration size, series order, band DP horizon)."""


class BadBand(WalkError):
    pass


class RegimeMismatch(WalkError):
    pass


class SymmetricUnsupported(WalkError):
    """Cycle formulas need p < q; at p = q the return time has infinite mean."""


class SeriesError(WalkError):
    pass


class ZeroConstantTerm(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class MethodDisagreement(WalkError):
    """Two exact methods produced different distributions."""

    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}
