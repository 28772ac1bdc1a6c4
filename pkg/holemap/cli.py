"""Command-line front end: ``holemap <subcommand> --input FILE ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import __version__
from .detection.config import DetectorConfig
from .detection.detector import keep_above, run_detector
from .detection.planar import PlanarProfiler
from .imaging.images import BinaryImage, Pixel
from .imaging.pnm import HEATMAP_FORMATS, load_grayscale, threshold_sublevel, write_heatmap
from .logging_config import configure_logging, startup_banner
from .settings import ENGINES, LOG_LEVELS, RuntimeSettings
from .topology.cubical import WindowRect, build_local_system, realize
from .topology.homology import betti
from .topology.persistence import FILTRATION_ORDERS, persistence, short_filtration, short_profile, sublevel_filtration
from .topology.sheaf import NSystem, global_section_dim, global_section_dim_n

LOGGER = logging.getLogger(__name__)
PROG = "holemap"


class CliUsageError(ValueError):
    """Raised instead of exiting when arguments do not parse."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(message)


def _integers(raw: str, count: Optional[int] = None, name: str = "value") -> List[int]:
    try:
        values = [int(token) for token in raw.split(",") if token.strip()]
    except ValueError:
        raise CliUsageError(f"invalid-{name}:{raw}") from None
    if not values or (count is not None and len(values) != count):
        raise CliUsageError(f"invalid-{name}:{raw}")
    return values


def parse_window(raw: str) -> WindowRect:
    """``r,c,n`` -> the n x n window whose top-left pixel is (r, c)."""

    row, col, size = _integers(raw, 3, "window")
    return WindowRect.square(row, col, size)


def parse_scales(raw: str) -> Tuple[int, ...]:
    return tuple(_integers(raw, None, "scales"))


def parse_dimensions(raw: str) -> Tuple[int, ...]:
    dims = tuple(_integers(raw, None, "q"))
    if any(q < 0 or q > 2 for q in dims):
        raise CliUsageError(f"invalid-q:{raw}")
    return dims


def parse_parts(raw: str, black: FrozenSet[Pixel]) -> List[FrozenSet[Pixel]]:
    """``r,c,h,w;r,c,h,w;...`` -> the black pixels inside each rectangle."""

    parts = []
    for chunk in raw.split(";"):
        if not chunk.strip():
            continue
        top, left, rows, cols = _integers(chunk, 4, "parts")
        if rows <= 0 or cols <= 0:
            raise CliUsageError(f"invalid-parts:{chunk}")
        parts.append(
            frozenset(
                (r, c) for r, c in black if top <= r < top + rows and left <= c < left + cols
            )
        )
    return parts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="netpbm (P1/P2/P5) file or whitespace integer grid")
    common.add_argument("--threshold", type=int, default=0, help="black pixels are those with value <= threshold")
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    common.add_argument("--workers", type=int, default=None, help="window evaluation processes")
    common.add_argument("--engine", choices=ENGINES, default=None)

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--step", type=int, required=True)
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--format", choices=HEATMAP_FORMATS, default="csv")

    parser = _Parser(prog=PROG, description="Locate holes in binary images with short-filtration persistence.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("betti", parents=[common], help="print b0 b1 of the black set")

    diagram = commands.add_parser("diagram", parents=[common], help="print a persistence diagram")
    diagram.add_argument("--sublevel", action="store_true", help="sub-level filtration of the grayscale values")
    diagram.add_argument("--window", type=parse_window, default=None, help="r,c,n window for the short filtration")
    diagram.add_argument("--order", choices=FILTRATION_ORDERS, default="x1-first")

    local = commands.add_parser("local", parents=[common], help="print m o i dim_gamma for one window")
    local.add_argument("--window", type=parse_window, required=True)
    local.add_argument("--q", type=int, choices=(0, 1, 2), default=1)

    detect = commands.add_parser(
        "detect",
        parents=[common, sweep],
        help="hole location heatmap",
        description="Windows that do not fit inside the image are skipped, so a border band may stay cold.",
    )
    detect.add_argument("--window-size", type=int, required=True)

    size = commands.add_parser("size", parents=[common, sweep], help="multiscale hole size heatmap")
    size.add_argument("--scales", type=parse_scales, required=True)
    size.add_argument("--threshold-heat", type=int, default=None, help="zero heat below this value")

    merge = commands.add_parser("merge", parents=[common, sweep], help="local merging number heatmap")
    merge.add_argument("--window-size", type=int, required=True)
    merge.add_argument("--q", type=int, choices=(0, 1), default=0)

    sections = commands.add_parser("sections", parents=[common], help="global sections of an n-system")
    sections.add_argument("--parts", required=True, help="r,c,h,w;r,c,h,w;... rectangles cutting the parts")
    sections.add_argument("--q", type=parse_dimensions, default=(0, 1))
    return parser


def _black_set(args: argparse.Namespace) -> BinaryImage:
    return threshold_sublevel(load_grayscale(args.input), args.threshold)


def _cmd_betti(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    image = _black_set(args)
    if settings.engine == "planar":
        profiler = PlanarProfiler(image)
        return f"{profiler.component_count} {profiler.hole_count}\n"
    complex_ = realize(image.black)
    return f"{betti(complex_, 0)} {betti(complex_, 1)}\n"


def _cmd_diagram(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    if args.sublevel:
        return persistence(sublevel_filtration(load_grayscale(args.input))).to_text()
    if args.window is None:
        raise CliUsageError("diagram-needs-window-or-sublevel")
    system = build_local_system(_black_set(args), args.window)
    return persistence(short_filtration(system, args.order)).to_text()


def _cmd_local(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    system = build_local_system(_black_set(args), args.window)
    profile = short_profile(system, args.q)
    sections = global_section_dim(system, args.q)
    return f"{profile.m} {profile.o} {profile.i} {sections.dim_gamma}\n"


def _write_sweep(args: argparse.Namespace, config: DetectorConfig, threshold_heat: Optional[int] = None) -> str:
    heatmap = run_detector(_black_set(args), config)
    if threshold_heat is not None:
        heatmap = keep_above(heatmap, threshold_heat)
    write_heatmap(heatmap, args.out, args.format)
    return ""


def _cmd_detect(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    config = DetectorConfig(
        window_size=args.window_size,
        step=args.step,
        mode="detect",
        engine=settings.engine,
        workers=settings.workers,
    )
    return _write_sweep(args, config)


def _cmd_size(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    config = DetectorConfig(
        window_size=min(args.scales),
        step=args.step,
        mode="size",
        scales=args.scales,
        engine=settings.engine,
        workers=settings.workers,
    )
    return _write_sweep(args, config, args.threshold_heat)


def _cmd_merge(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    config = DetectorConfig(
        window_size=args.window_size,
        step=args.step,
        mode="merge",
        merge_q=args.q,
        engine=settings.engine,
        workers=settings.workers,
    )
    return _write_sweep(args, config)


def _cmd_sections(args: argparse.Namespace, settings: RuntimeSettings) -> str:
    black = _black_set(args).black
    system = NSystem(ambient=black, parts=tuple(parse_parts(args.parts, black)))
    lines = []
    for q in args.q:
        space = global_section_dim_n(system, q)
        lines.append(f"{q} {space.dim_gamma} {space.phi_rank}\n")
    return "".join(lines)


_COMMANDS = {
    "betti": _cmd_betti,
    "diagram": _cmd_diagram,
    "local": _cmd_local,
    "detect": _cmd_detect,
    "size": _cmd_size,
    "merge": _cmd_merge,
    "sections": _cmd_sections,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the process exit status."""

    try:
        args = build_parser().parse_args(argv)
        settings = RuntimeSettings.from_env().override(
            log_level=args.log_level,
            workers=args.workers,
            engine=args.engine,
        )
        configure_logging(settings.log_level)
        startup_banner(PROG, stage="cli", command=args.command, **settings.to_dict())
        output = _COMMANDS[args.command](args, settings)
    except (ValueError, OSError) as exc:
        LOGGER.debug("command_failed", extra={"error": type(exc).__name__})
        sys.stderr.write(f"{PROG}: error: {exc}\n")
        return 1
    sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())


__all__ = ["CliUsageError", "build_parser", "main", "parse_parts", "parse_window", "run"]
