import logging

from mock_eisenstein.core.base_monitor import BaseCheckMonitor
from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.check_entities import CheckSuiteResult

logger = logging.getLogger(__name__)


class LoggingMonitor(BaseCheckMonitor):
    """Simple monitor that logs suite progress using Python's logging module."""

    def __init__(self):
        self.num_checks = 0
        self.failures = 0

    def on_suite_start(self, suite: str, num_checks: int) -> None:
        self.num_checks = num_checks
        self.failures = 0
        logger.info(f"Starting suite {suite} ({num_checks} check(s))")

    def on_check_complete(self, index: int, certificate: CongruenceCertificate) -> None:
        if not certificate.passed:
            self.failures += 1
            logger.warning(f"[{index + 1}/{self.num_checks}] {certificate.summary_line()}")
        else:
            logger.debug(f"[{index + 1}/{self.num_checks}] {certificate.summary_line()}")

    def on_suite_complete(self, result: CheckSuiteResult) -> None:
        summary = result.summarise()
        logger.info(
            f"Suite {result.suite} complete - "
            f"{summary.num_passed}/{summary.total} passed "
            f"({summary.pass_rate:.1f}%)"
            f"{' [negative control]' if result.expect_failure else ''}"
        )

    def on_error(self, suite: str, error: Exception) -> None:
        logger.error(f"Error in suite {suite}: {error}", exc_info=True)
