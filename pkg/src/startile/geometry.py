"""2D building blocks: points, degree angles, polar placement, circle division.

All angles are degrees; conversion to radians happens only inside trig
evaluation. Geometric comparisons throughout the package use an absolute
tolerance of ``TOLERANCE`` pattern units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidParameter

TOLERANCE = 1e-9


class Point(NamedTuple):
    """Cartesian point in pattern units."""

    x: float
    y: float


ORIGIN = Point(0.0, 0.0)


def normalize_deg(angle: float) -> float:
    """Reduce an angle in degrees to the canonical range [0, 360)."""
    a = angle % 360.0
    # Python's % can round up to the divisor itself for tiny negative inputs.
    return a if a < 360.0 else 0.0


@dataclass(frozen=True)
class CircleDivision:
    """Marked-point angles of one concentric circle.

    ``circle_index`` is 1-based. ``angles`` holds one degree value per marked
    point, normalized to [0, 360), stepping 360/n between consecutive points;
    circle w starts at (w-1) * 180/n.
    """

    circle_index: int
    n: int
    angles: tuple[float, ...]


def divide_circle_iterative(n: int, s: int) -> list[CircleDivision]:
    """Divide ``s`` concentric circles into ``n`` marked points each.

    Runs the accumulator loop: the running angle advances 360/n per point
    and an extra 180/n between circles, which shifts each circle's first
    point half a step relative to the previous circle.
    """
    if n < 3:
        raise InvalidParameter("n must be >= 3", field="N")
    if s < 2:
        raise InvalidParameter("s must be >= 2", field="S")
    divisions: list[CircleDivision] = []
    t = 0.0
    for w in range(1, s + 1):
        angles = []
        for _ in range(n):
            angles.append(normalize_deg(t))
            t += 360.0 / n
        t += 180.0 / n
        divisions.append(CircleDivision(w, n, tuple(angles)))
    return divisions


def divide_circle_closed(n: int, w: int, j: int) -> float:
    """Angle in degrees of marked point ``j`` on circle ``w`` (both 1-based)."""
    if n < 3:
        raise InvalidParameter("n must be >= 3", field="N")
    if w < 1:
        raise InvalidParameter("w must be >= 1", field="w")
    if not 1 <= j <= n:
        raise InvalidParameter(f"j must be in 1..{n}", field="j")
    return normalize_deg((w - 1) * (180.0 / n) + (j - 1) * (360.0 / n))


def polar_point(r: float, angle_deg: float, center: Point = ORIGIN) -> Point:
    """Point at distance ``r`` from ``center`` along ``angle_deg``."""
    if r <= 0:
        raise InvalidParameter("r must be > 0", field="r")
    rad = math.radians(angle_deg)
    return Point(center.x + r * math.cos(rad), center.y + r * math.sin(rad))
