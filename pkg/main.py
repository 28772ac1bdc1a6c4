"""Entry point for the holemap command-line tool."""

import importlib.util
import sys

REQUIRED_MODULES = (
    ("numpy", "numpy (install via `pip install -r requirements.txt`)"),
    ("scipy", "scipy (install via `pip install -r requirements.txt`)"),
)


def ensure_requirements() -> None:
    """Validate that the numerical stack is importable before running."""

    missing = [hint for module, hint in REQUIRED_MODULES if importlib.util.find_spec(module) is None]

    if missing:
        formatted = "\n - ".join(missing)
        sys.stderr.write(
            "holemap is missing required dependencies:\n - "
            f"{formatted}\n"
            "Install the listed dependencies and re-run `python main.py`.\n"
        )
        sys.exit(1)


def main() -> None:
    """Run the command line after verifying dependencies."""

    ensure_requirements()

    from holemap.cli import main as cli_main

    cli_main()


if __name__ == "__main__":
    main()
