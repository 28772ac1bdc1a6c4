"""Validated parameters of a sliding-window sweep."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from ..settings import ENGINES

MODES = ("detect", "size", "merge")


@dataclass(frozen=True)
class DetectorConfig:
    window_size: int
    step: int = 1
    mode: str = "detect"
    scales: Optional[Tuple[int, ...]] = None
    merge_q: int = 0
    engine: str = "planar"
    workers: int = 1

    def __post_init__(self) -> None:
        if self.window_size < 3:
            raise ValueError(f"invalid-window-size:{self.window_size}")
        if self.step < 1:
            raise ValueError(f"invalid-step:{self.step}")
        if self.mode not in MODES:
            raise ValueError(f"unknown-mode:{self.mode}")
        if self.scales is not None:
            object.__setattr__(self, "scales", tuple(self.scales))
            if not self.scales:
                raise ValueError("empty-scales")
            for scale in self.scales:
                if scale < 3:
                    raise ValueError(f"invalid-window-size:{scale}")
        if self.merge_q not in (0, 1):
            raise ValueError(f"unsupported-dimension:{self.merge_q}")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown-engine:{self.engine}")
        if self.workers < 1:
            raise ValueError(f"invalid-workers:{self.workers}")

    @property
    def q(self) -> int:
        return self.merge_q if self.mode == "merge" else 1

    def window_sizes(self) -> Tuple[int, ...]:
        return self.scales if self.scales is not None else (self.window_size,)


__all__ = ["DetectorConfig", "MODES"]
