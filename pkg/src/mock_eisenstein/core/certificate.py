"""Machine-readable verdicts of coefficientwise congruence checks."""

import json
from dataclasses import dataclass, field
from typing import Any

import yaml


@dataclass(frozen=True)
class CertificateDiff:
    """One exponent (or index) at which the two sides disagree mod p^l."""
    exponent: int
    lhs: int
    rhs: int

    def to_list(self) -> list[int]:
        return [self.exponent, self.lhs, self.rhs]


@dataclass
class CongruenceCertificate:
    """Structured verdict of a congruence check.

    The verdict is derived from the diffs, so "pass" holds exactly when no
    exponent disagrees.
    """
    check: str
    p: int
    l: int
    N: int | None = None
    weight_twice_k: int | None = None
    diffs: list[CertificateDiff] = field(default_factory=list)
    corrected_exponents: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    # Residue tables of both sides, ascending exponent; only for series checks.
    lhs_table: list[tuple[int, int]] | None = None
    rhs_table: list[tuple[int, int]] | None = None

    @property
    def verdict(self) -> str:
        return "pass" if not self.diffs else "fail"

    @property
    def passed(self) -> bool:
        return not self.diffs

    @property
    def modulus(self) -> int:
        return self.p ** self.l

    def diff_exponents(self) -> list[int]:
        return [d.exponent for d in self.diffs]

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "p": self.p,
            "l": self.l,
            "N": self.N,
            "weight_twice_k": self.weight_twice_k,
            "verdict": self.verdict,
            "diffs": [d.to_list() for d in self.diffs],
            "corrected_exponents": list(self.corrected_exponents),
            "check": self.check,
            "notes": list(self.notes),
        }
        if self.lhs_table is not None and self.rhs_table is not None:
            data["tables"] = {
                "lhs": [[e, r] for e, r in self.lhs_table],
                "rhs": [[e, r] for e, r in self.rhs_table],
            }
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_yaml(self) -> str:
        return yaml.dump(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CongruenceCertificate":
        tables = data.get("tables")
        return cls(
            check=data["check"],
            p=data["p"],
            l=data["l"],
            N=data.get("N"),
            weight_twice_k=data.get("weight_twice_k"),
            diffs=[CertificateDiff(*entry) for entry in data.get("diffs", [])],
            corrected_exponents=list(data.get("corrected_exponents", [])),
            notes=list(data.get("notes", [])),
            lhs_table=[tuple(x) for x in tables["lhs"]] if tables else None,
            rhs_table=[tuple(x) for x in tables["rhs"]] if tables else None,
        )

    def summary_line(self) -> str:
        params = f"p={self.p}, l={self.l}"
        if self.N is not None:
            params += f", N={self.N}"
        if self.weight_twice_k is not None:
            params += f", k={self.weight_twice_k}/2"
        status = "PASS" if self.passed else f"FAIL at {self.diff_exponents()}"
        return f"{self.check} ({params}): {status}"
