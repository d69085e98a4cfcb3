"""q-expansions reduced modulo p^l."""

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from mock_eisenstein.core.errors import DomainError, ModulusMismatchError, PDividesDenominatorError
from mock_eisenstein.padic.residue import reduce_rational
from mock_eisenstein.qseries.expansion import QExpansion


@dataclass(frozen=True)
class ResidueSeries:
    """Coefficients of a q-expansion as canonical residues in [0, p^l).

    Zero residues are not stored.
    """
    p: int
    l: int
    precision: int
    residues: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.l < 1:
            raise DomainError(f"l must be >= 1, got {self.l}")
        modulus = self.p ** self.l
        cleaned: dict[int, int] = {}
        for exponent, value in sorted(self.residues.items()):
            if exponent < 0 or exponent > self.precision:
                raise DomainError(f"exponent {exponent} outside 0..{self.precision}")
            value %= modulus
            if value:
                cleaned[exponent] = value
        object.__setattr__(self, "residues", MappingProxyType(cleaned))

    @property
    def modulus(self) -> int:
        return self.p ** self.l

    def residue(self, exponent: int) -> int:
        if exponent < 0 or exponent > self.precision:
            raise DomainError(f"exponent {exponent} is beyond precision {self.precision}")
        return self.residues.get(exponent, 0)

    def table(self, exponents: list[int] | None = None) -> list[tuple[int, int]]:
        """(exponent, residue) pairs for the given exponents, default every exponent 0..N."""
        if exponents is None:
            exponents = list(range(self.precision + 1))
        return [(e, self.residue(e)) for e in exponents]

    def add(self, other: "ResidueSeries") -> "ResidueSeries":
        _require_same_modulus(self, other)
        precision = min(self.precision, other.precision)
        return ResidueSeries(
            p=self.p,
            l=self.l,
            precision=precision,
            residues={e: self.residue(e) + other.residue(e) for e in range(precision + 1)},
        )

    def scale(self, c: int) -> "ResidueSeries":
        return ResidueSeries(
            p=self.p,
            l=self.l,
            precision=self.precision,
            residues={e: c * r for e, r in self.residues.items()},
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "l": self.l,
            "precision": self.precision,
            "residues": [[e, r] for e, r in self.residues.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ResidueSeries":
        data = json.loads(text)
        return cls(
            p=int(data["p"]),
            l=int(data["l"]),
            precision=int(data["precision"]),
            residues={int(e): int(r) for e, r in data["residues"]},
        )


def reduce_mod(a: QExpansion, p: int, l: int) -> ResidueSeries:
    """Reduce every coefficient of a mod p^l.

    Raises PDividesDenominatorError carrying the first offending exponent.
    """
    residues: dict[int, int] = {}
    for exponent, value in a.items():
        try:
            residues[exponent] = reduce_rational(value, p, l).value
        except PDividesDenominatorError as e:
            raise e.at_exponent(exponent) from None
    return ResidueSeries(p=p, l=l, precision=a.precision, residues=residues)


def compare(a: ResidueSeries, b: ResidueSeries) -> list[int]:
    """Exponents up to min precision where the residues differ, ascending."""
    _require_same_modulus(a, b)
    precision = min(a.precision, b.precision)
    return [e for e in range(precision + 1) if a.residue(e) != b.residue(e)]


def _require_same_modulus(a: ResidueSeries, b: ResidueSeries) -> None:
    if (a.p, a.l) != (b.p, b.l):
        raise ModulusMismatchError((a.p, a.l), (b.p, b.l))

