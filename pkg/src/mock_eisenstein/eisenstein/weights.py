from dataclasses import dataclass
from fractions import Fraction

from mock_eisenstein.core.errors import DomainError, WeightOutOfRangeError


@dataclass(frozen=True, order=True)
class HalfIntWeight:
    """A weight k = twice_k / 2 with twice_k odd and positive."""
    twice_k: int

    def __post_init__(self):
        if self.twice_k <= 0 or self.twice_k % 2 == 0:
            raise WeightOutOfRangeError(self.twice_k, "the numerator of k = t/2 must be odd and positive")

    @classmethod
    def parse(cls, text: str) -> "HalfIntWeight":
        """Parse "t/2" (e.g. "7/2")."""
        numerator, slash, denominator = text.strip().partition("/")
        if slash != "/" or denominator.strip() != "2":
            raise DomainError(f"Weight must be written as t/2, got {text!r}")
        try:
            twice_k = int(numerator)
        except ValueError:
            raise DomainError(f"Weight numerator is not an integer: {text!r}") from None
        return cls(twice_k)

    @classmethod
    def cohen_weight_for_level(cls, p: int, l: int) -> "HalfIntWeight":
        """k_l = 3/2 + p^(l-1) (p-1); gives 15/2 and 87/2 at p = 7."""
        return cls(3 + 2 * p ** (l - 1) * (p - 1))

    @property
    def k(self) -> Fraction:
        return Fraction(self.twice_k, 2)

    @property
    def l_value_index(self) -> int:
        """n with 3/2 - k = 1 - n, so the L-value is L(1 - n, chi)."""
        return (self.twice_k - 1) // 2

    @property
    def zeta_argument(self) -> int:
        """2 - 2k."""
        return 2 - self.twice_k

    @property
    def divisor_power(self) -> int:
        """k - 3/2, the exponent of d."""
        return (self.twice_k - 3) // 2

    @property
    def sigma_power(self) -> int:
        """2k - 2, the exponent of the divisor sum."""
        return self.twice_k - 2

    def shifted(self, integer: int) -> "HalfIntWeight":
        return HalfIntWeight(self.twice_k + 2 * integer)

    def require_cohen_range(self) -> None:
        """The coefficient formula is used for k >= 7/2 with k in 3/2 + 2Z."""
        if self.twice_k < 7:
            raise WeightOutOfRangeError(self.twice_k, "the Cohen coefficient formula needs k >= 7/2")
        if self.twice_k % 4 != 3:
            raise WeightOutOfRangeError(self.twice_k, "k must lie in 3/2 + 2Z")

    def __str__(self) -> str:
        return f"{self.twice_k}/2"
