"""Flat key=value configuration documents: parsing, serialization, pipeline.

A config is UTF-8 text with one ``key = value`` per line; ``#`` starts a
comment. Keys are case-sensitive and may appear once. ``mode``, ``N``,
``S`` and ``radii`` are required; everything else has a default:

    alpha=0  spr=0  special=none  base_rotation=0
    R=100  rows=1  cols=1  gap_N=6  inner_ratio=0.5  fill_down_gaps=true
    stroke_width=1.0  size=800  margin_ratio=0.05

Tiling keys are only allowed when ``mode = tiling``. The pattern center is
always the origin (rendering is translation-invariant). ``parse_config``
and ``serialize_config`` round-trip exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigSyntaxError, InvalidParameter, ValidationError
from .pattern import PatternSpec, SegmentSet, generate
from .tiling import GapFillSpec, TilingSpec, tile_plane

MODE_STAR = "star"
MODE_TILING = "tiling"


@dataclass(frozen=True)
class RenderOptions:
    """Stroke width and viewbox padding in pattern units; size in pixels."""

    stroke_width: float = 1.0
    size: int = 800
    margin_ratio: float = 0.05


@dataclass(frozen=True)
class TilingParams:
    """Tiling-mode keys as they appear in a config document."""

    R: float = 100.0
    rows: int = 1
    cols: int = 1
    gap_N: int = 6
    inner_ratio: float = 0.5
    fill_down_gaps: bool = True


@dataclass(frozen=True)
class ConfigDoc:
    mode: str
    pattern: PatternSpec
    tiling: TilingParams | None = None
    render: RenderOptions = RenderOptions()


def _parse_mode(s: str) -> str:
    if s not in (MODE_STAR, MODE_TILING):
        raise ValueError(f"mode must be 'star' or 'tiling', got {s!r}")
    return s


def _parse_int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise ValueError(f"not an integer: {s!r}") from None


def _parse_float(s: str) -> float:
    try:
        value = float(s)
    except ValueError:
        raise ValueError(f"not a number: {s!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"not a finite number: {s!r}")
    return value


def _parse_radii(s: str) -> tuple[float, ...]:
    tokens = [tok.strip() for tok in s.split(",")]
    if not tokens or any(not tok for tok in tokens):
        raise ValueError(f"radii must be comma-separated numbers, got {s!r}")
    return tuple(_parse_float(tok) for tok in tokens)


def _parse_special(s: str) -> int | None:
    return None if s == "none" else _parse_int(s)


def _parse_bool(s: str) -> bool:
    if s == "true":
        return True
    if s == "false":
        return False
    raise ValueError(f"expected 'true' or 'false', got {s!r}")


_CONVERTERS = {
    "mode": _parse_mode,
    "N": _parse_int,
    "S": _parse_int,
    "radii": _parse_radii,
    "alpha": _parse_float,
    "spr": _parse_float,
    "special": _parse_special,
    "base_rotation": _parse_float,
    "R": _parse_float,
    "rows": _parse_int,
    "cols": _parse_int,
    "gap_N": _parse_int,
    "inner_ratio": _parse_float,
    "fill_down_gaps": _parse_bool,
    "stroke_width": _parse_float,
    "size": _parse_int,
    "margin_ratio": _parse_float,
}

_TILING_KEYS = ("R", "rows", "cols", "gap_N", "inner_ratio", "fill_down_gaps")


def parse_config(text: str) -> ConfigDoc:
    """Parse a config document; see the module docstring for the format."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, rest = line.partition("=")
        if not eq:
            raise ConfigSyntaxError("expected 'key = value'", line=lineno)
        key, value = key.strip(), rest.strip()
        if key not in _CONVERTERS:
            raise ConfigSyntaxError(f"unknown key {key!r}", line=lineno, key=key)
        if key in values:
            raise ConfigSyntaxError(f"duplicate key {key!r}", line=lineno, key=key)
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError as exc:
            raise ConfigSyntaxError(str(exc), line=lineno, key=key) from None
    return _assemble(values)


def config_from_json(payload: object) -> ConfigDoc:
    """Build a ConfigDoc from a JSON object mirroring the config keys.

    Values may be JSON-native (numbers, booleans, null, arrays) or strings
    in the config-file notation; both parse identically.
    """
    if not isinstance(payload, dict):
        raise ValidationError("body", "expected a JSON object of config keys")
    values: dict[str, object] = {}
    for key, raw in payload.items():
        if key not in _CONVERTERS:
            raise ConfigSyntaxError(f"unknown key {key!r}", key=key)
        try:
            values[key] = _CONVERTERS[key](_json_value_to_text(key, raw))
        except ValueError as exc:
            raise ConfigSyntaxError(str(exc), key=key) from None
    return _assemble(values)


def _json_value_to_text(key: str, value: object) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return ",".join(_json_value_to_text(key, v) for v in value)
    raise ValueError(f"unsupported JSON value for {key!r}")


def _assemble(values: dict[str, object]) -> ConfigDoc:
    if "mode" not in values:
        raise ConfigSyntaxError("mode is required", key="mode")
    mode = values.pop("mode")
    for key in ("N", "S", "radii"):
        if key not in values:
            raise ConfigSyntaxError(f"{key} is required", key=key)
    if mode == MODE_STAR:
        for key in _TILING_KEYS:
            if key in values:
                raise ValidationError(key, "only valid when mode = tiling")
    try:
        pattern = PatternSpec(
            N=values.pop("N"),
            S=values.pop("S"),
            radii=values.pop("radii"),
            alpha=values.pop("alpha", 0.0),
            spr=values.pop("spr", 0.0),
            special=values.pop("special", None),
            base_rotation=values.pop("base_rotation", 0.0),
        )
    except InvalidParameter as exc:
        raise ValidationError(exc.field or "pattern", str(exc)) from None
    tiling = None
    if mode == MODE_TILING:
        tiling = TilingParams(
            R=values.pop("R", 100.0),
            rows=values.pop("rows", 1),
            cols=values.pop("cols", 1),
            gap_N=values.pop("gap_N", 6),
            inner_ratio=values.pop("inner_ratio", 0.5),
            fill_down_gaps=values.pop("fill_down_gaps", True),
        )
    render = RenderOptions(
        stroke_width=values.pop("stroke_width", 1.0),
        size=values.pop("size", 800),
        margin_ratio=values.pop("margin_ratio", 0.05),
    )
    if render.stroke_width <= 0:
        raise ValidationError("stroke_width", "must be > 0")
    if not isinstance(render.size, int) or render.size < 1:
        raise ValidationError("size", "must be an integer >= 1")
    if not 0.0 <= render.margin_ratio < 1.0:
        raise ValidationError("margin_ratio", "must lie in [0, 1)")
    doc = ConfigDoc(mode, pattern, tiling, render)
    if mode == MODE_TILING:
        try:
            to_tiling_spec(doc)  # surface tiling invariant violations at parse time
        except InvalidParameter as exc:
            raise ValidationError(exc.field or "tiling", str(exc)) from None
    return doc


def serialize_config(doc: ConfigDoc) -> str:
    """Emit a config document that parses back to ``doc`` exactly."""
    p = doc.pattern
    lines = [
        f"mode = {doc.mode}",
        f"N = {p.N}",
        f"S = {p.S}",
        f"radii = {','.join(repr(r) for r in p.radii)}",
        f"alpha = {p.alpha!r}",
        f"spr = {p.spr!r}",
        f"special = {'none' if p.special is None else p.special}",
        f"base_rotation = {p.base_rotation!r}",
    ]
    if doc.tiling is not None:
        t = doc.tiling
        lines += [
            f"R = {t.R!r}",
            f"rows = {t.rows}",
            f"cols = {t.cols}",
            f"gap_N = {t.gap_N}",
            f"inner_ratio = {t.inner_ratio!r}",
            f"fill_down_gaps = {'true' if t.fill_down_gaps else 'false'}",
        ]
    r = doc.render
    lines += [
        f"stroke_width = {r.stroke_width!r}",
        f"size = {r.size}",
        f"margin_ratio = {r.margin_ratio!r}",
    ]
    return "\n".join(lines) + "\n"


def config_to_json(doc: ConfigDoc) -> dict:
    """The JSON-object form of ``doc`` (same keys as the config file)."""
    p = doc.pattern
    data: dict[str, object] = {
        "mode": doc.mode,
        "N": p.N,
        "S": p.S,
        "radii": list(p.radii),
        "alpha": p.alpha,
        "spr": p.spr,
        "special": p.special,
        "base_rotation": p.base_rotation,
    }
    if doc.tiling is not None:
        t = doc.tiling
        data.update(
            R=t.R,
            rows=t.rows,
            cols=t.cols,
            gap_N=t.gap_N,
            inner_ratio=t.inner_ratio,
            fill_down_gaps=t.fill_down_gaps,
        )
    r = doc.render
    data.update(stroke_width=r.stroke_width, size=r.size, margin_ratio=r.margin_ratio)
    return data


def to_tiling_spec(doc: ConfigDoc) -> TilingSpec:
    """The core tiling description for a tiling-mode config."""
    t = doc.tiling if doc.tiling is not None else TilingParams()
    return TilingSpec(
        circle_pattern=doc.pattern,
        gap_fill=GapFillSpec(N=t.gap_N, inner_ratio=t.inner_ratio),
        R=t.R,
        rows=t.rows,
        cols=t.cols,
        fill_down_gaps=t.fill_down_gaps,
    )


def build_segments(doc: ConfigDoc) -> SegmentSet:
    """Run the full geometry pipeline for ``doc``."""
    if doc.mode == MODE_STAR:
        return generate(doc.pattern)
    return tile_plane(to_tiling_spec(doc))


def collect_warnings(doc: ConfigDoc) -> list[str]:
    """Non-fatal oddities worth reporting alongside a render."""
    warnings: list[str] = []
    p = doc.pattern
    if p.special is not None and p.special_radius > max(p.radii):
        warnings.append(
            "special points lie outside the outermost circle "
            "(radii[special-1] - spr exceeds the largest radius)"
        )
    return warnings
