from typing import Dict, List, Optional

from shared.constants.texts import Texts


class CompositeGateException(Exception):
    """Base exception for the composite gate toolkit."""
    def __init__(self, message: str, error_code: str):
        self.message = message
        self.error_code = error_code
        super().__init__(message)


class DomainError(CompositeGateException):
    """Raised on non-finite angles, empty sequences and similar bad inputs."""
    def __init__(self, message: str = Texts.VALIDATION_ERROR):
        super().__init__(message, "DOMAIN_ERROR")


class ContractViolationError(CompositeGateException):
    """Raised when an input breaks an operation contract (e.g. non-unitary matrix)."""
    def __init__(self, message: str = Texts.VALIDATION_ERROR):
        super().__init__(message, "CONTRACT_VIOLATION")


class InternalConsistencyError(CompositeGateException):
    """Raised when two independent computations that must agree do not."""
    def __init__(self, message: str = Texts.ERROR_INTERNAL):
        super().__init__(message, "INTERNAL_CONSISTENCY")


class RegionError(CompositeGateException):
    """Raised when (theta0, thetaT) lies outside a variant's region of validity."""
    def __init__(self, message: str, diagnostics: Optional[List[Dict]] = None, error_code: str = "REGION_ERROR"):
        self.diagnostics = diagnostics or []
        super().__init__(message, error_code)


class NoVariantCoversError(RegionError):
    """Raised when no sequence variant covers the requested rotation."""
    def __init__(self, theta0: float, theta_target: float, diagnostics: List[Dict]):
        verdicts = ", ".join(f"{d['variant']}={'ok' if d['valid'] else 'falha'}" for d in diagnostics)
        super().__init__(
            Texts.format(Texts.ERROR_NO_VARIANT, theta0, theta_target, verdicts),
            diagnostics,
            "NO_VARIANT_COVERS",
        )


class PreconditionError(CompositeGateException):
    """Raised when an operation is called outside its documented input range."""
    def __init__(self, message: str):
        super().__init__(message, "PRECONDITION_ERROR")


class SingularityError(CompositeGateException):
    """Raised at singular targets; callers must use the limit procedure."""
    def __init__(self, theta_target: float):
        self.theta_target = theta_target
        super().__init__(Texts.format(Texts.ERROR_SINGULAR_TARGET, theta_target), "SINGULARITY")


class DegenerateSystemError(CompositeGateException):
    """Raised when a constraint system is singular."""
    def __init__(self, condition_number: float):
        self.condition_number = condition_number
        super().__init__(Texts.format(Texts.ERROR_DEGENERATE_SYSTEM, condition_number), "DEGENERATE_SYSTEM")


class ExtractionError(CompositeGateException):
    """Raised when no phase sequence reproduces the requested coefficients."""
    def __init__(self, best_residual: float, message: Optional[str] = None):
        self.best_residual = best_residual
        super().__init__(
            message or Texts.format(Texts.ERROR_EXTRACTION_FAILED, best_residual),
            "EXTRACTION_FAILED",
        )


class CalibrationError(CompositeGateException):
    """Raised when zones cannot be brought to the rotation a scan requires."""
    def __init__(self, message: str, error_code: str = "CALIBRATION_ERROR"):
        super().__init__(message, error_code)


class UncoverableSpreadError(CalibrationError):
    """Raised when the zone Rabi spread is wider than the full-range window."""
    def __init__(self, ratio: float, window: float):
        self.ratio = ratio
        super().__init__(Texts.format(Texts.ERROR_UNCOVERABLE, ratio, window), "UNCOVERABLE_SPREAD")


class RangeError(CompositeGateException):
    """Raised when a requested displacement exceeds the DAC full scale."""
    def __init__(self, message: str):
        super().__init__(message, "RANGE_ERROR")


class FitError(CompositeGateException):
    """Raised when the contrast fit cannot be performed or does not converge."""
    def __init__(self, message: str, residual: Optional[float] = None):
        self.residual = residual
        super().__init__(message, "FIT_ERROR")


class UndefinedCorrelationError(CompositeGateException):
    """Raised when a residual vector has zero variance."""
    def __init__(self, message: str = Texts.ERROR_CORRELATION_VARIANCE):
        super().__init__(message, "UNDEFINED_CORRELATION")


class ConfigError(CompositeGateException):
    """Raised when a configuration document violates the schema."""
    def __init__(self, message: str, offending_keys: Optional[List[str]] = None):
        self.offending_keys = offending_keys or []
        super().__init__(message, "CONFIG_ERROR")


class ArtifactIOError(CompositeGateException):
    """Raised when an output artifact cannot be written."""
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(Texts.format(Texts.ERROR_ARTIFACT_WRITE, path, reason), "ARTIFACT_IO")
