from abc import ABC, abstractmethod
from fractions import Fraction


class BaseBernoulliCache(ABC):
    """Abstract base class for persisting Bernoulli numbers between runs.

    The cache is advisory: a load that cannot be trusted returns None and the
    caller recomputes.
    """

    @abstractmethod
    def load(self) -> dict[int, Fraction] | None:
        """Return the stored table index -> B_index, or None if absent or unusable."""
        pass

    @abstractmethod
    def store(self, table: dict[int, Fraction]) -> None:
        """Replace the stored table."""
        pass

    @abstractmethod
    def clear(self) -> None:
        """Delete every stored value."""
        pass
