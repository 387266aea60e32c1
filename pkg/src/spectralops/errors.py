"""Exception hierarchy."""


class SpectralOpsError(Exception):
    pass


class ZeroDenominator(SpectralOpsError, ZeroDivisionError):
    pass


class InvalidParameter(SpectralOpsError, ValueError):
    pass


class InvalidN(InvalidParameter):
    pass


class UnsupportedAlpha(InvalidParameter):
    pass


class IndexOutOfRange(InvalidParameter, IndexError):
    pass


class TruncationTooSmall(InvalidParameter):
    pass


class NormalizationError(SpectralOpsError):
    """A weighted operator word did not reduce to rational coefficients."""


class NonCancellingExpWeight(NormalizationError):
    pass


class NonIntegerPowerResidue(NormalizationError):
    pass


class ParityViolation(SpectralOpsError):
    pass


class ConfigError(SpectralOpsError):
    pass
