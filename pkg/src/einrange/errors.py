"""Exception hierarchy. Validation errors and numerical-kernel failures are
kept distinct so callers (and the CLI exit codes) can tell them apart."""


class EinrangeError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(EinrangeError):
    """Operands have incompatible mode shapes, or a construction is malformed."""


class WeightError(EinrangeError):
    """A weight tensor is not Hermitian positive definite (or mis-shaped)."""


class FormatError(EinrangeError):
    """A serialized tensor or report does not match the expected format."""


class KernelError(EinrangeError):
    """A numerical kernel failed (non-convergence, singular system, ...)."""


class SingularMatrixError(KernelError):
    """Linear solve or inversion hit a numerically singular matrix."""
