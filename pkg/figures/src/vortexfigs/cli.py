"""vortexfigs: render figure presets from sweep CSV files."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .reader import DatasetError
from .recipes import RECIPES, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortexfigs",
        description="Render publication-style figures (PNG + SVG) from vortexforce CSV datasets.",
    )
    parser.add_argument("--version", action="version", version=f"vortexfigs {__version__}")
    parser.add_argument("recipe", choices=sorted(RECIPES), help="figure preset")
    parser.add_argument("csv", help="input dataset written by the vortexforce CLI")
    parser.add_argument("-o", "--outdir", default=".", help="output directory (default: cwd)")
    parser.add_argument(
        "--formats",
        default="png,svg",
        help="comma-separated output formats (default: png,svg)",
    )
    parser.add_argument("--stem", default=None, help="output file stem (default: recipe name)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    formats = tuple(f.strip() for f in args.formats.split(",") if f.strip())
    try:
        written = render(args.recipe, args.csv, args.outdir, formats=formats, stem=args.stem)
    except DatasetError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
