"""Errors raised by the construction and search modules"""


class FolkmanError(Exception):
    """Base class for every error raised by folkman_module"""


class InvalidParameter(FolkmanError, ValueError):
    """An argument lies outside the domain of the operation"""


class ConstructionUndefined(FolkmanError):
    """The witness construction K_{m-p-2} + Gamma_p needs m >= p + 2"""


class OutOfTheoremRange(FolkmanError):
    """Parameters fall outside the hypotheses the bounds are proved for"""


class InstanceTooLarge(FolkmanError):
    """A search or enumeration guard was exceeded"""


class SearchBudgetExceeded(InstanceTooLarge):
    """
    The arrowing search hit its node budget before finishing.
    Carries the statistics gathered up to that point.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class Graph6Error(InvalidParameter):
    """Malformed graph6 input; offset is the 0-based byte position"""

    def __init__(self, message, offset):
        super().__init__(f'{message} (byte {offset})')
        self.offset = offset


class CertificateError(FolkmanError):
    """A certificate failed validation on replay"""
