"""Runtime settings read from the environment."""

import os
from dataclasses import dataclass
from pathlib import Path

CACHE_DIR_ENV = "MOCK_EISENSTEIN_CACHE_DIR"
WORKERS_ENV = "MOCK_EISENSTEIN_WORKERS"


def default_cache_dir() -> Path:
    base = os.getenv("XDG_CACHE_HOME")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "mock_eisenstein"


@dataclass
class RuntimeSettings:
    cache_dir: Path
    workers: int
    use_cache: bool = True

    @classmethod
    def from_env(cls) -> "RuntimeSettings":
        cache_dir = os.getenv(CACHE_DIR_ENV)
        workers = os.getenv(WORKERS_ENV)
        return cls(
            cache_dir=Path(cache_dir) if cache_dir else default_cache_dir(),
            workers=int(workers) if workers else (os.cpu_count() or 1),
        )
