"""Structured logging configuration for deterministic command-line runs."""
from __future__ import annotations

import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from typing import IO, Any, Dict, Optional

# Attributes every LogRecord carries; anything else arrived through ``extra``.
_RESERVED = set(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


@dataclass
class StructuredLogRecord:
    """Serializable log record container."""

    timestamp: float
    level: str
    message: str
    context: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "ts": round(self.timestamp, 3),
            "level": self.level,
            "msg": self.message,
            **self.context,
        }
        return json.dumps(payload, sort_keys=True, default=str)


class JsonLogFormatter(logging.Formatter):
    """Formatter that emits one JSON object per record, extras included."""

    def format(self, record: logging.LogRecord) -> str:  # noqa: D401
        context: Dict[str, Any] = {"module": record.module, "pid": os.getpid()}
        for key, value in vars(record).items():
            if key not in _RESERVED and not key.startswith("_"):
                context[key] = value
        enriched = StructuredLogRecord(
            timestamp=record.created,
            level=record.levelname,
            message=record.getMessage(),
            context=context,
        )
        return enriched.to_json()


def configure_logging(level: str = "WARNING", stream: Optional[IO[str]] = None) -> None:
    """Configure package-wide structured logging on stderr (or ``stream``)."""

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JsonLogFormatter())

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        handlers=[handler],
        force=True,
    )
    logging.getLogger(__name__).debug("structured_logging_configured", extra={"stage": "startup"})


def startup_banner(app_name: str, stage: str = "cold_start", **context: Any) -> None:
    """Emit a startup record carrying the effective runtime settings."""

    logger = logging.getLogger(app_name)
    logger.info(
        "startup",
        extra={
            "stage": stage,
            "time": round(time.time(), 3),
            **context,
        },
    )


__all__ = ["JsonLogFormatter", "StructuredLogRecord", "configure_logging", "startup_banner"]
