"""Star and rosette segment generation from the nine-parameter model.

A pattern is S concentric circles, each divided into N marked points.
Marked points i and i+1 of each circle connect to point i of the next
circle (the chevron rule). One optional "special" circle pair instead
routes through two flanking special points per marked point, closing a
petal around each point of the special circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import DegenerateLine, InvalidParameter, NoSpecialCircle, ParallelRay
from .geometry import ORIGIN, Point, divide_circle_iterative, polar_point


@dataclass(frozen=True)
class PatternSpec:
    """Nine-parameter description of a star or rosette.

    ``radii`` are pattern units, used strictly in index order (they need not
    increase). ``special`` selects the larger circle of the rosette pair
    (an index in 2..S) or None for a pure star. ``spr`` is the signed radial
    inset of the circle carrying the special points: that circle's radius is
    ``radii[special-1] - spr`` and must stay positive (negative ``spr``
    pushes the special points outward). ``alpha`` is the angular half-spread
    of the two special points around each marked point, degrees in
    (-360, 360). ``base_rotation`` turns the whole pattern.
    """

    N: int
    S: int
    radii: tuple[float, ...]
    alpha: float = 0.0
    spr: float = 0.0
    special: int | None = None
    center: Point = ORIGIN
    base_rotation: float = 0.0

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 3:
            raise InvalidParameter("N must be an integer >= 3", field="N")
        if not isinstance(self.S, int) or self.S < 2:
            raise InvalidParameter("S must be an integer >= 2", field="S")
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        if len(self.radii) != self.S:
            raise InvalidParameter(
                f"expected {self.S} radii, got {len(self.radii)}", field="radii"
            )
        if not all(math.isfinite(r) and r > 0 for r in self.radii):
            raise InvalidParameter("all radii must be finite and > 0", field="radii")
        for name in ("alpha", "spr", "base_rotation"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParameter(f"{name} must be finite", field=name)
            object.__setattr__(self, name, value)
        if not -360.0 < self.alpha < 360.0:
            raise InvalidParameter("alpha must lie in (-360, 360)", field="alpha")
        cx, cy = self.center
        if not (math.isfinite(cx) and math.isfinite(cy)):
            raise InvalidParameter("center must be finite", field="center")
        object.__setattr__(self, "center", Point(float(cx), float(cy)))
        if self.special is not None:
            if not isinstance(self.special, int) or not 2 <= self.special <= self.S:
                raise InvalidParameter(
                    "special must be an integer in 2..S or none", field="special"
                )
            if self.special_radius <= 0:
                raise InvalidParameter(
                    "special-point circle radius radii[special-1] - spr must be > 0",
                    field="spr",
                )

    @property
    def special_radius(self) -> float:
        """Radius of the circle the special points sit on."""
        if self.special is None:
            raise NoSpecialCircle("pattern has no special circle")
        return self.radii[self.special - 1] - self.spr


class Segment(NamedTuple):
    """Line segment between two points, in emission order."""

    a: Point
    b: Point


@dataclass(frozen=True)
class SegmentSet:
    """Ordered, deterministic segment list plus the spec that produced it."""

    segments: tuple[Segment, ...]
    spec: PatternSpec

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)


def generate(spec: PatternSpec) -> SegmentSet:
    """Generate the full segment list for ``spec``.

    For every adjacent circle pair (w, w+1), marked points i and i+1 of the
    inner circle connect to point i of the outer circle. The special pair
    routes through the special points instead, closing each petal:
    inner(i) -> left flank -> outer(i) <- right flank <- inner(i+1).

    Emission order is fixed (pairs ascending, then i ascending, then the
    two or four segments of that step), so identical specs produce
    bitwise-identical output. Segment count is exactly 2N(S-1) without a
    special circle and 2N(S-2) + 4N with one.
    """
    divisions = divide_circle_iterative(spec.N, spec.S)
    points = [
        [polar_point(r, a + spec.base_rotation, spec.center) for a in div.angles]
        for div, r in zip(divisions, spec.radii)
    ]
    n = spec.N
    segments: list[Segment] = []
    for w in range(1, spec.S):  # adjacent pair (w, w+1), 1-based
        inner, outer = points[w - 1], points[w]
        if spec.special == w + 1:
            g = spec.special_radius
            for i in range(n):
                ang = divisions[w].angles[i] + spec.base_rotation
                sp1 = polar_point(g, ang - spec.alpha, spec.center)
                sp2 = polar_point(g, ang + spec.alpha, spec.center)
                segments.append(Segment(inner[i], sp1))
                segments.append(Segment(inner[(i + 1) % n], sp2))
                segments.append(Segment(sp1, outer[i]))
                segments.append(Segment(sp2, outer[i]))
        else:
            for i in range(n):
                segments.append(Segment(inner[i], outer[i]))
                segments.append(Segment(inner[(i + 1) % n], outer[i]))
    return SegmentSet(tuple(segments), spec)


def special_points(spec: PatternSpec, i: int) -> tuple[Point, Point]:
    """The two special points flanking marked point ``i`` (1-based).

    Both lie on the circle of radius ``radii[special-1] - spr``, at the
    special circle's i-th angle offset by -alpha and +alpha.
    """
    if spec.special is None:
        raise NoSpecialCircle("pattern has no special circle")
    if not 1 <= i <= spec.N:
        raise InvalidParameter(f"i must be in 1..{spec.N}", field="i")
    divisions = divide_circle_iterative(spec.N, spec.special)
    ang = divisions[spec.special - 1].angles[i - 1] + spec.base_rotation
    g = spec.special_radius
    return (
        polar_point(g, ang - spec.alpha, spec.center),
        polar_point(g, ang + spec.alpha, spec.center),
    )


def ray_line_radii(p: Point, q: Point, angles_deg: Sequence[float]) -> list[float]:
    """Radius at which each polar ray from the origin meets line pq.

    Returned radii are signed: a negative value means the line crosses the
    opposite ray. Raises DegenerateLine when pq passes through the origin
    (every intersection would sit at the center) and ParallelRay when a ray
    direction is parallel to the line (|g*cos - sin| < 1e-12, with g the
    line gradient).
    """
    dx, dy = q.x - p.x, q.y - p.y
    length = math.hypot(dx, dy)
    if length == 0.0:
        raise DegenerateLine("the two reference points coincide")
    if abs(p.x * q.y - p.y * q.x) / length < 1e-12:
        raise DegenerateLine("line passes through the center")
    radii: list[float] = []
    if dx == 0.0:
        # Vertical line x = p.x; the gradient form cannot represent it.
        for a in angles_deg:
            c = math.cos(math.radians(a))
            if abs(c) < 1e-12:
                raise ParallelRay(f"ray at {a} degrees is parallel to the line")
            radii.append(p.x / c)
        return radii
    g = dy / dx
    for a in angles_deg:
        rad = math.radians(a)
        den = g * math.cos(rad) - math.sin(rad)
        if abs(den) < 1e-12:
            raise ParallelRay(f"ray at {a} degrees is parallel to the line")
        radii.append((g * p.x - p.y) / den)
    return radii


def desired_radii(r1: float, r2: float, n: int, s: int) -> list[float]:
    """Radii that make the first marked points of ``s`` circles collinear.

    The line through the first marked points of circles 1 and 2 (radii
    ``r1`` and ``r2``) is intersected with every further first-point ray,
    so all consecutive point-to-point gradients come out equal. Rays
    pointing away from the line yield negative radii; callers that feed the
    result into a PatternSpec should check signs.
    """
    if r1 <= 0 or r2 <= 0:
        raise InvalidParameter("r1 and r2 must be > 0", field="radii")
    if n < 3:
        raise InvalidParameter("n must be >= 3", field="N")
    if s < 3:
        raise InvalidParameter("s must be >= 3", field="S")
    delta = 180.0 / n
    p1 = polar_point(r1, 0.0)
    p2 = polar_point(r2, delta)
    return ray_line_radii(p1, p2, [(w - 1) * delta for w in range(1, s + 1)])
