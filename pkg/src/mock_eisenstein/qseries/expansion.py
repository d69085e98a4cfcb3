"""Truncated q-expansions with exact rational coefficients."""

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping

from mock_eisenstein.core.errors import DomainError


def format_rational(value: Fraction) -> str:
    """Always "num/den", so integers serialize as e.g. "56/1"."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


@dataclass(frozen=True)
class QExpansion:
    """sum_{n=0}^{N} a_n q^n known exactly up to q^N.

    Only nonzero coefficients are stored; an absent exponent <= N means 0.
    """
    precision: int
    coefficients: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.precision < 0:
            raise DomainError(f"precision must be >= 0, got {self.precision}")
        cleaned: dict[int, Fraction] = {}
        for exponent, value in sorted(self.coefficients.items()):
            if exponent < 0 or exponent > self.precision:
                raise DomainError(
                    f"exponent {exponent} outside 0..{self.precision}"
                )
            value = Fraction(value)
            if value != 0:
                cleaned[exponent] = value
        object.__setattr__(self, "coefficients", MappingProxyType(cleaned))

    def __getitem__(self, exponent: int) -> Fraction:
        return self.coefficient(exponent)

    def coefficient(self, exponent: int) -> Fraction:
        if exponent < 0 or exponent > self.precision:
            raise DomainError(f"exponent {exponent} is beyond precision {self.precision}")
        return self.coefficients.get(exponent, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in ascending order."""
        return iter(self.coefficients.items())

    def truncate(self, precision: int) -> "QExpansion":
        if precision > self.precision:
            raise DomainError(f"cannot raise precision {self.precision} to {precision}")
        return QExpansion(
            precision=precision,
            coefficients={e: v for e, v in self.coefficients.items() if e <= precision},
        )

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "QExpansion") -> "QExpansion":
        return add(self, other)

    def __neg__(self) -> "QExpansion":
        return scale(Fraction(-1), self)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return add(self, -other)

    def __str__(self) -> str:
        return format_series(self)

    def to_dict(self) -> dict:
        return {
            "precision": self.precision,
            "coeffs": [[e, format_rational(v)] for e, v in self.coefficients.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "QExpansion":
        return cls(
            precision=int(data["precision"]),
            coefficients={int(e): parse_rational(v) for e, v in data["coeffs"]},
        )

    @classmethod
    def from_json(cls, text: str) -> "QExpansion":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        """"exponent,value" rows for every exponent 0..N, values as num/den strings."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["exponent", "value"])
        for exponent in range(self.precision + 1):
            writer.writerow([exponent, format_rational(self.coefficient(exponent))])
        return buffer.getvalue()


def add(a: QExpansion, b: QExpansion) -> QExpansion:
    """Coefficientwise sum, known up to min(N_a, N_b)."""
    precision = min(a.precision, b.precision)
    coefficients: dict[int, Fraction] = {}
    for series in (a, b):
        for exponent, value in series.items():
            if exponent <= precision:
                coefficients[exponent] = coefficients.get(exponent, Fraction(0)) + value
    return QExpansion(precision=precision, coefficients=coefficients)


def scale(c: Fraction | int, a: QExpansion) -> QExpansion:
    c = Fraction(c)
    return QExpansion(
        precision=a.precision,
        coefficients={e: c * v for e, v in a.items()},
    )


def format_series(series: QExpansion, max_terms: int | None = None) -> str:
    """Render as "1 - 4q^3 - 6q^4 + O(q^N+1)"."""
    terms: list[str] = []
    for index, (exponent, value) in enumerate(series.items()):
        if max_terms is not None and index >= max_terms:
            terms.append("+ ...")
            break
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        if exponent == 0:
            body = str(magnitude)
        else:
            monomial = "q" if exponent == 1 else f"q^{exponent}"
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        if not terms:
            terms.append(body if sign == "+" else f"-{body}")
        else:
            terms.append(f"{sign} {body}")
    if not terms:
        terms.append("0")
    terms.append(f"+ O(q^{series.precision + 1})")
    return " ".join(terms)
