from abc import ABC, abstractmethod

from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.check_entities import CheckSuiteResult


class BaseCheckMonitor(ABC):
    """Abstract base class for observing check suite progress."""

    @abstractmethod
    def on_suite_start(self, suite: str, num_checks: int) -> None:
        """Called before the first check of a suite runs."""
        pass

    @abstractmethod
    def on_check_complete(self, index: int, certificate: CongruenceCertificate) -> None:
        """Called once per certificate, in grid order."""
        pass

    @abstractmethod
    def on_suite_complete(self, result: CheckSuiteResult) -> None:
        """Called when every check of the suite has a certificate."""
        pass

    @abstractmethod
    def on_error(self, suite: str, error: Exception) -> None:
        """Called when a check raises instead of producing a certificate."""
        pass
