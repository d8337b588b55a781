"""Exception hierarchy shared by every curvekit module."""


class CurvekitError(Exception):
    """Base class for all library errors."""


class DivisionByZero(CurvekitError, ZeroDivisionError):
    pass


class ConductorOverflow(CurvekitError):
    pass


class NotRepresentable(CurvekitError):
    pass


class NotASubfield(CurvekitError):
    pass


class SingularMatrix(CurvekitError):
    pass


class ZeroForm(CurvekitError):
    pass


class MissingM(CurvekitError):
    pass


class ArityMismatch(CurvekitError):
    pass


class DegreeMismatch(CurvekitError):
    pass


class ExclusionViolated(CurvekitError):
    """A parameter hits a forbidden value; carries the slot and reason."""

    def __init__(self, slot, reason, value=None):
        self.slot = slot
        self.reason = reason
        self.value = value
        shown = "" if value is None else f" (value {value})"
        super().__init__(f"slot {slot}: {reason}{shown}")


class UnsupportedCase(CurvekitError):
    pass


class NuReductionFailure(CurvekitError):
    pass


class NormalizationFailure(CurvekitError):
    pass
