"""Exception hierarchy shared by all modules."""


class MindocError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MindocError, ValueError):
    """An input lies outside the domain where a formula is defined."""


class DegenerateCostModelError(DomainError):
    """Electricity and fuel prices are both zero, so C_mu vanishes."""


class DegenerateConfigurationError(DomainError):
    """Every optimality-polynomial coefficient is zero."""


class InfeasibleRootError(MindocError):
    """The optimality polynomial has no positive real root."""


class ResourceExhaustedError(MindocError):
    """Fuel or battery charge ran out before the target range."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class ShootingError(MindocError):
    """No sign change of the terminal costate was found."""

    def __init__(self, message, scanned=()):
        super().__init__(message)
        self.scanned = list(scanned)


class PlanningError(MindocError):
    """RRT* finished its sample budget without reaching the goal."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})


class ConfigError(MindocError):
    """A scenario file failed to parse or validate."""
