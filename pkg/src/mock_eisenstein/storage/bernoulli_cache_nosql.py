import hashlib
import logging
from fractions import Fraction
from pathlib import Path

from sympy import isprime
from tinydb import TinyDB

from mock_eisenstein.core.base_bernoulli_cache import BaseBernoulliCache
from mock_eisenstein.core.errors import CacheCorruptionError
from mock_eisenstein.numtheory.arithmetic import divisors
from mock_eisenstein.numtheory.bernoulli import even_bernoulli_numbers

logger = logging.getLogger(__name__)

CACHE_VERSION = 2
CACHE_FILE_NAME = "bernoulli_cache.json"
# Stored values up to this index are recomputed and compared on every load.
SPOT_CHECK_INDEX = 64


def von_staudt_clausen_denominator(n: int) -> int:
    """Denominator of B_n for even n >= 2: the product of primes p with (p - 1) | n."""
    denominator = 1
    for d in divisors(n):
        if isprime(d + 1):
            denominator *= d + 1
    return denominator


def _encode(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def table_digest(table: dict[int, Fraction]) -> str:
    """SHA-256 over "index:num/den;" for every entry in ascending index order."""
    digest = hashlib.sha256()
    for index, value in sorted(table.items()):
        digest.update(f"{index}:{_encode(value)};".encode())
    return digest.hexdigest()


class NoSQLBernoulliCache(BaseBernoulliCache):
    """TinyDB-based persistent table of Bernoulli numbers.

    Values are stored as "num/den" strings, one document per index, next to a
    version document that carries a digest of the whole table. A table is only
    served if it decodes, matches its digest, passes the von Staudt-Clausen
    denominator check and agrees with a fresh computation up to SPOT_CHECK_INDEX;
    anything else is discarded.
    """

    def __init__(self, db_path: str | Path):
        """
        Initialize the cache.

        Args:
            db_path: Path to the TinyDB JSON file. A directory gets CACHE_FILE_NAME appended.
        """
        path = Path(db_path)
        if path.is_dir() or path.suffix != ".json":
            path = path / CACHE_FILE_NAME
        self.db_path = path
        self.db: TinyDB | None = None

    def _open(self) -> TinyDB:
        if self.db is None:
            self.db_path.parent.mkdir(parents=True, exist_ok=True)
            self.db = TinyDB(self.db_path)
        return self.db

    def _read_table(self) -> dict[int, Fraction]:
        db = self._open()
        meta = db.table("meta").all()
        if not meta:
            return {}
        if meta[0].get("version") != CACHE_VERSION:
            raise CacheCorruptionError(f"Unsupported cache version {meta[0].get('version')!r}")

        table: dict[int, Fraction] = {}
        for doc in db.table("bernoulli").all():
            index = int(doc["index"])
            value = Fraction(doc["value"])
            if index < 0 or index % 2 == 1:
                raise CacheCorruptionError(f"Unexpected index {index}")
            if index > 0 and value.denominator != von_staudt_clausen_denominator(index):
                raise CacheCorruptionError(f"B_{index} fails the denominator check")
            table[index] = value

        if meta[0].get("digest") != table_digest(table):
            raise CacheCorruptionError("Stored values do not match the table digest")
        reference = even_bernoulli_numbers(min(max(table, default=0), SPOT_CHECK_INDEX))
        for index, expected in reference.items():
            if index in table and table[index] != expected:
                raise CacheCorruptionError(f"B_{index} disagrees with a fresh computation")
        return table

    def load(self) -> dict[int, Fraction] | None:
        try:
            table = self._read_table()
        except (CacheCorruptionError, ValueError, KeyError, TypeError, AttributeError) as e:
            logger.warning(f"Discarding unusable Bernoulli cache at {self.db_path}: {e}")
            self._discard()
            return None
        if not table:
            return None
        logger.debug(f"Read {len(table)} Bernoulli number(s) from {self.db_path}")
        return table

    def store(self, table: dict[int, Fraction]) -> None:
        try:
            db = self._open()
            meta = db.table("meta")
            meta.truncate()
            meta.insert({"version": CACHE_VERSION, "digest": table_digest(table)})
            values = db.table("bernoulli")
            values.truncate()
            values.insert_multiple(
                {"index": index, "value": _encode(value)}
                for index, value in sorted(table.items())
            )
        except (OSError, ValueError) as e:
            logger.warning(f"Could not write Bernoulli cache to {self.db_path}: {e}")

    def _discard(self) -> None:
        self.close()
        try:
            self.db_path.unlink(missing_ok=True)
        except OSError as e:
            logger.warning(f"Could not delete {self.db_path}: {e}")

    def clear(self) -> None:
        self._discard()

    def close(self) -> None:
        """Close the database connection."""
        if self.db is not None:
            self.db.close()
            self.db = None
