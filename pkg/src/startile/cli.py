"""Command-line interface: render, presets, validate, serve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import service
from .config import build_segments, collect_warnings, parse_config
from .errors import StartileError
from .presets import get_preset, list_presets
from .render import render_svg


def _cmd_render(args) -> int:
    if args.preset:
        doc = get_preset(args.preset).config
    else:
        doc = parse_config(Path(args.config).read_text(encoding="utf-8"))
    segments = build_segments(doc)
    svg = render_svg(segments, doc.render)
    Path(args.out).write_bytes(svg)
    for warning in collect_warnings(doc):
        print(f"warning: {warning}", file=sys.stderr)
    print(f"wrote {args.out} ({len(segments.segments)} segments)")
    return 0


def _cmd_presets(args) -> int:
    for preset in list_presets():
        line = f"{preset.name:14s} {preset.provenance}"
        if preset.notes:
            line += f" [{preset.notes}]"
        print(line)
    return 0


def _cmd_validate(args) -> int:
    try:
        parse_config(Path(args.config).read_text(encoding="utf-8"))
    except (StartileError, OSError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    print("ok")
    return 0


def _cmd_serve(args) -> int:
    service.run(host=args.host, port=args.port, ui_dir=args.ui)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="startile",
        description="Generate star/rosette patterns and hexagonal tilings as SVG.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    render = sub.add_parser("render", help="render a config file or preset to SVG")
    source = render.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", help="path to a key=value config file")
    source.add_argument("--preset", help="name of a built-in preset")
    render.add_argument("--out", required=True, help="output SVG path")
    render.set_defaults(func=_cmd_render)

    presets = sub.add_parser("presets", help="list built-in presets with provenance")
    presets.set_defaults(func=_cmd_presets)

    validate = sub.add_parser("validate", help="check a config file (exit 0/1)")
    validate.add_argument("--config", required=True)
    validate.set_defaults(func=_cmd_validate)

    serve = sub.add_parser("serve", help="start the HTTP render service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui", default=None, help="also serve explorer UI files from this directory")
    serve.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StartileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
