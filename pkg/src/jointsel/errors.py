"""Exception hierarchy shared by the library and the CLI."""


class JointSelError(Exception):
    """Base class for all errors raised by :mod:`jointsel`."""


class InputError(JointSelError, ValueError):
    """Malformed or out-of-range input (bad edge, parse failure, non-square matrix)."""


class PreconditionError(JointSelError):
    """The network violates a standing assumption, e.g. it is not strongly connected."""


class InfeasibleError(JointSelError):
    """No perfect assignment exists over the allowed cells."""


class SizeLimitError(JointSelError):
    """An exponential-time routine was asked to run beyond its configured limit."""
