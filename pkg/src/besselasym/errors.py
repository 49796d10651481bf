"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of the requested operation."""


class SectorError(DomainError):
    """The surface argument lies outside the sector of validity of an expansion."""


class NoApplicableBoundError(DomainError):
    """No error-bound theorem covers the requested (family, nu, N) combination."""


class AccuracyError(RuntimeError):
    """A numerical routine failed to reach its target accuracy.

    Carries the best available estimate so callers can decide whether a
    degraded result is still usable.
    """

    def __init__(self, message, partial=None, est_abs_err=None):
        super().__init__(message)
        self.partial = partial
        self.est_abs_err = est_abs_err
