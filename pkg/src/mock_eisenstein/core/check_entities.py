from dataclasses import dataclass, field

import yaml

from mock_eisenstein.core.certificate import CongruenceCertificate


class SuiteSummary:
    def __init__(self, num_passed: int, num_failed: int):
        self.num_passed = num_passed
        self.num_failed = num_failed

    @property
    def total(self) -> int:
        return self.num_passed + self.num_failed

    @property
    def pass_rate(self) -> float:
        """Percentage of certificates that passed."""
        if self.total == 0:
            return 0.0
        return (self.num_passed / self.total) * 100.0


@dataclass
class CheckSuiteResult:
    """Certificates produced by one suite run, in grid order."""
    suite: str
    certificates: list[CongruenceCertificate] = field(default_factory=list)
    # Suites whose checks are expected to fail (negative controls) pass when every certificate fails.
    expect_failure: bool = False

    @property
    def all_passed(self) -> bool:
        if self.expect_failure:
            return all(not c.passed for c in self.certificates)
        return all(c.passed for c in self.certificates)

    def summarise(self) -> SuiteSummary:
        num_passed = sum(1 for c in self.certificates if c.passed)
        return SuiteSummary(num_passed=num_passed, num_failed=len(self.certificates) - num_passed)

    def to_dict(self) -> dict:
        summary = self.summarise()
        return {
            "suite": self.suite,
            "expect_failure": self.expect_failure,
            "ok": self.all_passed,
            "total": summary.total,
            "passed": summary.num_passed,
            "failed": summary.num_failed,
            "certificates": [c.to_dict() for c in self.certificates],
        }

    def to_yaml(self) -> str:
        return yaml.dump(self.to_dict(), sort_keys=False)

    def to_formatted_string(self) -> str:
        summary = self.summarise()
        lines = [
            f"# Suite: {self.suite}",
            "",
            "### Summary",
            f"- Total: {summary.total}",
            f"- Passed: {summary.num_passed}/{summary.total} ({summary.pass_rate:.2f}%)",
        ]
        if self.expect_failure:
            lines.append("- Negative control: every check is expected to fail")
        lines.extend(["", "### Certificates"])
        for i, cert in enumerate(self.certificates, start=1):
            lines.append(f"{i}. {cert.summary_line()}")
            for note in cert.notes:
                lines.append(f"   Note: {note}")
        return "\n".join(lines)
