"""Environment-driven runtime settings."""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from typing import Dict, Mapping, Optional

ENGINES = ("planar", "reduction")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class RuntimeSettings:
    """Process-level knobs; CLI flags override whatever the environment says."""

    log_level: str = "WARNING"
    workers: int = 1
    engine: str = "planar"

    def __post_init__(self) -> None:
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"unknown-log-level:{self.log_level}")
        if self.workers < 1:
            raise ValueError(f"invalid-workers:{self.workers}")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown-engine:{self.engine}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "RuntimeSettings":
        env = os.environ if environ is None else environ
        raw_workers = env.get("HOLEMAP_WORKERS", "1")
        try:
            workers = int(raw_workers)
        except ValueError:
            raise ValueError(f"invalid-workers:{raw_workers}") from None
        return cls(
            log_level=env.get("HOLEMAP_LOG_LEVEL", "WARNING").upper(),
            workers=workers,
            engine=env.get("HOLEMAP_ENGINE", "planar"),
        )

    def override(self, **changes: object) -> "RuntimeSettings":
        values = self.to_dict()
        values.update({key: value for key, value in changes.items() if value is not None})
        return RuntimeSettings(**values)  # type: ignore[arg-type]

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


__all__ = ["ENGINES", "LOG_LEVELS", "RuntimeSettings"]
