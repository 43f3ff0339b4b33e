"""Plane coverage built from three mutually tangent circles plus their gap circle.

The repeat unit is an up-pointing triple of equal circles (side 2R
equilateral centers). Each circle is filled with a rescaled pattern, the
inscribed gap circle gets a small two-circle star, and the unit repeats
over the hexagonal lattice u = (2R, 0), v = (R, sqrt(3) R). Adjacent
placements share circles, so replication deduplicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import product

from .errors import DegenerateTriple, InvalidParameter, MotifCapExceeded
from .geometry import ORIGIN, Point
from .pattern import PatternSpec, Segment, SegmentSet, generate

SQRT3 = math.sqrt(3.0)

# r/R for the circle inscribed between three mutually tangent equal circles
GAP_RADIUS_RATIO = 2.0 / SQRT3 - 1.0


@dataclass(frozen=True)
class TangentTriple:
    """Centers of three equal mutually tangent circles, apex above the base pair."""

    a: Point
    b: Point
    c: Point
    radius: float


@dataclass(frozen=True)
class SurroundedCircle:
    """Circle inscribed in the gap between the three tangent circles."""

    center: Point
    radius: float


@dataclass(frozen=True)
class GapFillSpec:
    """Two-circle star dropped into each gap circle.

    The star's outer radius equals the gap circle radius; the inner radius
    is ``inner_ratio`` times that, constrained to [0.5, 1).
    """

    N: int
    inner_ratio: float

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 3:
            raise InvalidParameter("gap_N must be an integer >= 3", field="gap_N")
        ratio = float(self.inner_ratio)
        if not math.isfinite(ratio) or not 0.5 <= ratio < 1.0:
            raise InvalidParameter(
                "inner_ratio must lie in [0.5, 1)", field="inner_ratio"
            )
        object.__setattr__(self, "inner_ratio", ratio)


@dataclass(frozen=True)
class TilingSpec:
    """One motif description plus lattice repeat counts."""

    circle_pattern: PatternSpec
    gap_fill: GapFillSpec
    R: float
    rows: int
    cols: int
    fill_down_gaps: bool = True
    motif_cap: int = 10_000

    def __post_init__(self):
        radius = float(self.R)
        if not math.isfinite(radius) or radius <= 0:
            raise InvalidParameter("R must be finite and > 0", field="R")
        object.__setattr__(self, "R", radius)
        if not isinstance(self.rows, int) or self.rows < 1:
            raise InvalidParameter("rows must be an integer >= 1", field="rows")
        if not isinstance(self.cols, int) or self.cols < 1:
            raise InvalidParameter("cols must be an integer >= 1", field="cols")
        if not isinstance(self.motif_cap, int) or self.motif_cap < 1:
            raise InvalidParameter("motif_cap must be an integer >= 1", field="motif_cap")


def build_triple(radius: float, anchor: Point = ORIGIN) -> TangentTriple:
    """Canonical tangent triple: a at ``anchor``, b right of it, c the apex."""
    if radius <= 0:
        raise InvalidParameter("radius must be > 0", field="R")
    return TangentTriple(
        Point(anchor.x, anchor.y),
        Point(anchor.x + 2.0 * radius, anchor.y),
        Point(anchor.x + radius, anchor.y + SQRT3 * radius),
        float(radius),
    )


_TANGENCY_TOL = 1e-6


def surrounded_circle(triple: TangentTriple) -> SurroundedCircle:
    """Center and radius of the gap circle of ``triple``.

    center = ((x_a + x_b)/2, y_a + (y_c - y_a)/3) and radius = 2*(s_y - y_a) - R,
    which always comes out to R * (2/sqrt(3) - 1).
    """
    a, b, c = triple.a, triple.b, triple.c
    side = 2.0 * triple.radius
    for p, q in ((a, b), (b, c), (a, c)):
        if abs(math.dist(p, q) - side) > _TANGENCY_TOL:
            raise DegenerateTriple(
                "circle centers are not mutually tangent at the stated radius"
            )
    if abs(a.y - b.y) > _TANGENCY_TOL or c.y <= a.y:
        raise DegenerateTriple("expected canonical orientation: a, b level and c above")
    sx = (a.x + b.x) / 2.0
    sy = a.y + (c.y - a.y) / 3.0
    m = sy - a.y
    return SurroundedCircle(Point(sx, sy), 2.0 * m - triple.radius)


def scaled_to_radius(pattern: PatternSpec, radius: float, center: Point) -> PatternSpec:
    """Rescale ``pattern`` so its outermost circle inscribes in ``radius``.

    ``spr`` scales with the radii so the special-point circle keeps its
    relative position.
    """
    k = radius / max(pattern.radii)
    return replace(
        pattern,
        radii=tuple(r * k for r in pattern.radii),
        spr=pattern.spr * k,
        center=center,
    )


def gap_pattern(gap: GapFillSpec, circle: SurroundedCircle) -> PatternSpec:
    """Two-circle star spec sized to a gap circle."""
    return PatternSpec(
        N=gap.N,
        S=2,
        radii=(gap.inner_ratio * circle.radius, circle.radius),
        center=circle.center,
    )


def fill_motif(spec: TilingSpec, triple: TangentTriple) -> SegmentSet:
    """The pattern at each of the three circle centers plus the gap star."""
    segments: list[Segment] = []
    for center in (triple.a, triple.b, triple.c):
        scaled = scaled_to_radius(spec.circle_pattern, triple.radius, center)
        segments.extend(generate(scaled).segments)
    segments.extend(generate(gap_pattern(spec.gap_fill, surrounded_circle(triple))).segments)
    return SegmentSet(tuple(segments), spec.circle_pattern)


def _down_gap(triple: TangentTriple) -> SurroundedCircle:
    # Gap of the inverted triangle beside the apex: circles c, c+u and b.
    up = surrounded_circle(triple)
    return SurroundedCircle(
        Point(triple.a.x + 2.0 * triple.radius, triple.a.y + 2.0 * triple.radius / SQRT3),
        up.radius,
    )


def _mirror_vertically(segments, cy: float) -> list[Segment]:
    def flip(p: Point) -> Point:
        return Point(p.x, 2.0 * cy - p.y)

    return [Segment(flip(s.a), flip(s.b)) for s in segments]


class SegmentIndex:
    """Set of segments up to endpoint tolerance, orientation-insensitive.

    Cells are 1e-6 wide; candidates from the 3x3 cell neighborhood of each
    endpoint are confirmed against the true tolerance, so duplicates that
    land on a cell boundary are still found.
    """

    _GRID = 1e-6

    def __init__(self, tol: float = 1e-9):
        self._tol = tol
        self._cells: dict[tuple, list[Segment]] = {}

    def _cell(self, p: Point) -> tuple[int, int]:
        return (round(p.x / self._GRID), round(p.y / self._GRID))

    def _matches(self, s: Segment, t: Segment) -> bool:
        tol = self._tol

        def close(p: Point, q: Point) -> bool:
            return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol

        return (close(s.a, t.a) and close(s.b, t.b)) or (
            close(s.a, t.b) and close(s.b, t.a)
        )

    def contains(self, seg: Segment) -> bool:
        ca, cb = self._cell(seg.a), self._cell(seg.b)
        for dax, day, dbx, dby in product((0, -1, 1), repeat=4):
            key = tuple(sorted(((ca[0] + dax, ca[1] + day), (cb[0] + dbx, cb[1] + dby))))
            if any(self._matches(seg, t) for t in self._cells.get(key, ())):
                return True
        return False

    def add(self, seg: Segment) -> bool:
        """Insert ``seg``; returns True when it was not already present."""
        if self.contains(seg):
            return False
        key = tuple(sorted((self._cell(seg.a), self._cell(seg.b))))
        self._cells.setdefault(key, []).append(seg)
        return True


def tile_plane(spec: TilingSpec) -> SegmentSet:
    """Repeat the filled motif over the hexagonal lattice.

    Placement (row, col) translates the base motif by col*(2R, 0) +
    row*(R, sqrt(3) R). Circles shared between adjacent placements are
    emitted once: segments whose endpoints agree within 1e-9 are dropped,
    first occurrence in row-major order winning. With ``fill_down_gaps``
    each placement also fills the inverted gap beside its apex with the
    same gap star mirrored vertically.
    """
    if spec.rows * spec.cols > spec.motif_cap:
        raise MotifCapExceeded(
            f"rows*cols = {spec.rows * spec.cols} exceeds the cap of {spec.motif_cap}"
        )
    base = build_triple(spec.R)
    cell = list(fill_motif(spec, base).segments)
    if spec.fill_down_gaps:
        down = _down_gap(base)
        star = generate(gap_pattern(spec.gap_fill, down)).segments
        cell.extend(_mirror_vertically(star, down.center.y))
    seen = SegmentIndex()
    out: list[Segment] = []
    for row in range(spec.rows):
        for col in range(spec.cols):
            ox = col * (2.0 * spec.R) + row * spec.R
            oy = row * (SQRT3 * spec.R)
            for s in cell:
                moved = Segment(
                    Point(s.a.x + ox, s.a.y + oy), Point(s.b.x + ox, s.b.y + oy)
                )
                if seen.add(moved):
                    out.append(moved)
    return SegmentSet(tuple(out), spec.circle_pattern)
