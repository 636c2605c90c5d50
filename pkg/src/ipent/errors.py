"""Exception hierarchy shared by every ipent module."""


class IpentError(ValueError):
    """Base class for all errors raised by ipent."""


class InvalidInput(IpentError):
    pass


class NotHermitian(IpentError):
    pass


class NotSymmetric(IpentError):
    pass


class NotAntisymmetric(IpentError):
    pass


class NotCommuting(IpentError):
    pass


class NoConvergence(IpentError):
    pass


class ZeroState(IpentError):
    pass


class DimensionMismatch(IpentError):
    pass


class StatisticsMismatch(IpentError):
    pass


class NotNormalized(IpentError):
    pass


class ZeroProbabilityEvent(IpentError):
    pass
