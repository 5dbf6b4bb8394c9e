"""Exception types shared across the package."""


class LeError(Exception):
    """Base error; ``code`` is a stable machine-readable tag."""

    code = "ERROR"

    def __init__(self, message: str = "", code: str | None = None, stage: str | None = None):
        super().__init__(message or (code or self.code))
        if code is not None:
            self.code = code
        self.stage = stage


class NotCurveError(LeError):
    code = "NOT_CURVE"


class SplitIncompleteError(LeError):
    """Raised with the partial decomposition attached as ``partial``."""

    code = "SPLIT_INCOMPLETE"

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class GenericTrialFailed(LeError):
    code = "GENERIC_TRIAL_FAILED"


class ImproperIntersection(LeError):
    code = "IMPROPER_INTERSECTION"


class JacobianError(LeError):
    """``code`` is ``DIM_NOT_ONE`` or ``SMOOTH``."""

    code = "DIM_NOT_ONE"


class ClassificationError(LeError):
    """``code`` is ``INVALID_INPUT`` or ``INCONSISTENT``."""

    code = "INVALID_INPUT"


class NotPrimeError(LeError, ValueError):
    code = "NOT_PRIME"


class ShapeMismatch(LeError, ValueError):
    code = "SHAPE_MISMATCH"
