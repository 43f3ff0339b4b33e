"""Shared test helpers: tolerant segment/point set comparison, spec factories.

The lookup index here is deliberately independent of the production
deduplication code: cells are 1e-6 wide and candidates from the 3x3
neighborhood of each endpoint are confirmed against the true tolerance.
"""

from __future__ import annotations

import math
import random
from itertools import product

from startile.geometry import Point
from startile.pattern import PatternSpec, Segment

GRID = 1e-6


def _cell(p: Point) -> tuple[int, int]:
    return (round(p.x / GRID), round(p.y / GRID))


class SegmentLookup:
    def __init__(self, segments, tol=1e-9):
        self.tol = tol
        self.cells: dict[tuple, list[Segment]] = {}
        for s in segments:
            key = tuple(sorted((_cell(s.a), _cell(s.b))))
            self.cells.setdefault(key, []).append(s)

    def _match(self, s: Segment, t: Segment) -> bool:
        tol = self.tol

        def close(p, q):
            return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol

        return (close(s.a, t.a) and close(s.b, t.b)) or (
            close(s.a, t.b) and close(s.b, t.a)
        )

    def contains(self, seg: Segment) -> bool:
        ca, cb = _cell(seg.a), _cell(seg.b)
        for dax, day, dbx, dby in product((0, -1, 1), repeat=4):
            key = tuple(sorted(((ca[0] + dax, ca[1] + day), (cb[0] + dbx, cb[1] + dby))))
            if any(self._match(seg, t) for t in self.cells.get(key, ())):
                return True
        return False


class PointLookup:
    def __init__(self, points, tol=1e-9):
        self.tol = tol
        self.cells: dict[tuple, list[Point]] = {}
        for p in points:
            self.cells.setdefault(_cell(p), []).append(p)

    def contains(self, p: Point) -> bool:
        cx, cy = _cell(p)
        for dx, dy in product((0, -1, 1), repeat=2):
            for q in self.cells.get((cx + dx, cy + dy), ()):
                if abs(p.x - q.x) <= self.tol and abs(p.y - q.y) <= self.tol:
                    return True
        return False


def same_segment_set(a, b, tol=1e-9) -> bool:
    """Unordered equality of two segment collections within ``tol``."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    la, lb = SegmentLookup(a, tol), SegmentLookup(b, tol)
    return all(lb.contains(s) for s in a) and all(la.contains(s) for s in b)


def same_point_set(a, b, tol=1e-9) -> bool:
    a, b = list(a), list(b)
    la, lb = PointLookup(a, tol), PointLookup(b, tol)
    return all(lb.contains(p) for p in a) and all(la.contains(p) for p in b)


def rotate_segments(segments, degrees, center=Point(0.0, 0.0)):
    rad = math.radians(degrees)
    c, s = math.cos(rad), math.sin(rad)

    def rot(p: Point) -> Point:
        dx, dy = p.x - center.x, p.y - center.y
        return Point(center.x + dx * c - dy * s, center.y + dx * s + dy * c)

    return [Segment(rot(t.a), rot(t.b)) for t in segments]


def reflect_segments_horizontal(segments, center=Point(0.0, 0.0)):
    def ref(p: Point) -> Point:
        return Point(p.x, 2.0 * center.y - p.y)

    return [Segment(ref(t.a), ref(t.b)) for t in segments]


def endpoints(segments):
    for s in segments:
        yield s.a
        yield s.b


def random_pattern_spec(rng: random.Random) -> PatternSpec:
    """Valid spec with center at the origin and no base rotation."""
    n = rng.randint(3, 24)
    s = rng.randint(2, 6)
    radii = tuple(rng.uniform(5.0, 400.0) for _ in range(s))
    if rng.random() < 0.5:
        special = rng.randint(2, s)
        ring = rng.uniform(1.0, 500.0)  # radius of the special-point circle
        return PatternSpec(
            N=n,
            S=s,
            radii=radii,
            alpha=rng.uniform(-90.0, 90.0),
            spr=radii[special - 1] - ring,
            special=special,
        )
    return PatternSpec(N=n, S=s, radii=radii)


def expected_segment_count(spec: PatternSpec) -> int:
    if spec.special is None:
        return 2 * spec.N * (spec.S - 1)
    return 2 * spec.N * (spec.S - 2) + 4 * spec.N
