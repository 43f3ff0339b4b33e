"""Deterministic SVG emission for segment sets.

Numbers are formatted with 9 significant digits and elements are emitted
in segment order, so identical inputs produce bytewise-identical output.
The y axis is flipped at serialization time so +y in pattern space points
up on screen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import RenderOptions
from .errors import EmptyPattern
from .pattern import Segment, SegmentSet


@dataclass(frozen=True)
class RenderDoc:
    """Resolution-independent stroke list; viewbox in pattern coordinates."""

    viewbox: tuple[float, float, float, float]  # min_x, min_y, width, height
    strokes: tuple[tuple[Segment, float], ...]


def build_render_doc(segments: SegmentSet, opts: RenderOptions) -> RenderDoc:
    """Bound all segments tightly, padded by margin_ratio of the larger extent."""
    if not segments.segments:
        raise EmptyPattern("segment set is empty")
    xs = [p.x for s in segments for p in (s.a, s.b)]
    ys = [p.y for s in segments for p in (s.a, s.b)]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    extent = max(max_x - min_x, max_y - min_y)
    pad = opts.margin_ratio * (extent if extent > 0 else 1.0)
    return RenderDoc(
        (min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad),
        tuple((s, opts.stroke_width) for s in segments),
    )


def _num(v: float) -> str:
    if v == 0:
        v = 0.0  # avoid "-0"
    return format(v, ".9g")


def doc_to_svg(doc: RenderDoc, size: int) -> bytes:
    vx, vy, vw, vh = doc.viewbox
    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" '
        f'viewBox="{_num(vx)} {_num(-(vy + vh))} {_num(vw)} {_num(vh)}">',
        '<g fill="none" stroke="#1a1a1a" stroke-linecap="round">',
    ]
    for s, width in doc.strokes:
        parts.append(
            f'<line x1="{_num(s.a.x)}" y1="{_num(-s.a.y)}" '
            f'x2="{_num(s.b.x)}" y2="{_num(-s.b.y)}" stroke-width="{_num(width)}"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def render_svg(segments: SegmentSet, opts: RenderOptions | None = None) -> bytes:
    """Render a segment set to a standalone SVG 1.1 document."""
    if opts is None:
        opts = RenderOptions()
    return doc_to_svg(build_render_doc(segments, opts), opts.size)
