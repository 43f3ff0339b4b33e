import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from startile.errors import DegenerateTriple, InvalidParameter, MotifCapExceeded
from startile.geometry import Point
from startile.pattern import PatternSpec, Segment, generate
from startile.tiling import (
    GAP_RADIUS_RATIO,
    GapFillSpec,
    TangentTriple,
    TilingSpec,
    build_triple,
    fill_motif,
    gap_pattern,
    scaled_to_radius,
    surrounded_circle,
    tile_plane,
)

from conftest import SegmentLookup, endpoints, same_segment_set

SQRT3 = math.sqrt(3.0)


def centroid_oracle(triple):
    """Independent gap-circle computation: triangle centroid, vertex distance."""
    cx = (triple.a.x + triple.b.x + triple.c.x) / 3.0
    cy = (triple.a.y + triple.b.y + triple.c.y) / 3.0
    radius = math.dist((cx, cy), triple.a) - triple.radius
    return (cx, cy), radius


def table3_spec(rows=1, cols=1, fill_down_gaps=True, R=1.0, gap_n=6):
    pattern = PatternSpec(N=12, S=2, radii=(171.0, 23.0), alpha=53.0, spr=-50.0, special=2)
    return TilingSpec(
        circle_pattern=pattern,
        gap_fill=GapFillSpec(N=gap_n, inner_ratio=0.5),
        R=R,
        rows=rows,
        cols=cols,
        fill_down_gaps=fill_down_gaps,
    )


class TestBuildTriple:
    def test_unit_triple(self):
        t = build_triple(1.0)
        assert t.a == (0.0, 0.0)
        assert t.b == (2.0, 0.0)
        assert t.c == pytest.approx((1.0, 1.7320508075688772), abs=1e-9)

    def test_scaled_translated(self):
        t = build_triple(0.5, Point(3.0, 3.0))
        assert t.b == pytest.approx((4.0, 3.0), abs=1e-12)
        assert t.c == pytest.approx((3.5, 3.0 + SQRT3 * 0.5), abs=1e-12)

    @given(radius=st.floats(0.01, 100.0), ax=st.floats(-50.0, 50.0), ay=st.floats(-50.0, 50.0))
    def test_pairwise_distances(self, radius, ax, ay):
        t = build_triple(radius, Point(ax, ay))
        for p, q in ((t.a, t.b), (t.b, t.c), (t.a, t.c)):
            assert math.dist(p, q) == pytest.approx(2.0 * radius, abs=1e-9)

    def test_rejects_nonpositive_radius(self):
        with pytest.raises(InvalidParameter):
            build_triple(0.0)


class TestSurroundedCircle:
    def test_unit_case(self):
        got = surrounded_circle(build_triple(1.0))
        assert got.center == pytest.approx((1.0, 0.5773502691896257), abs=1e-9)
        assert got.radius == pytest.approx(0.15470053837925168, abs=1e-9)

    def test_scaling(self):
        got = surrounded_circle(build_triple(10.0))
        assert got.radius == pytest.approx(1.5470053837925168, abs=1e-9)

    def test_tangency(self):
        t = build_triple(1.0)
        got = surrounded_circle(t)
        for vertex in (t.a, t.b, t.c):
            assert math.dist(got.center, vertex) == pytest.approx(
                1.0 + got.radius, abs=1e-9
            )

    @given(
        radius=st.floats(0.1, 50.0),
        ax=st.floats(-100.0, 100.0),
        ay=st.floats(-100.0, 100.0),
    )
    @settings(max_examples=100)
    def test_matches_centroid_oracle(self, radius, ax, ay):
        t = build_triple(radius, Point(ax, ay))
        got = surrounded_circle(t)
        (ox, oy), oradius = centroid_oracle(t)
        assert got.center.x == pytest.approx(ox, abs=1e-9)
        assert got.center.y == pytest.approx(oy, abs=1e-9)
        assert got.radius == pytest.approx(oradius, abs=1e-9)
        assert got.radius / radius == pytest.approx(GAP_RADIUS_RATIO, abs=1e-12)

    def test_rejects_broken_tangency(self):
        t = TangentTriple(Point(0.0, 0.0), Point(2.0, 0.0), Point(1.0, 2.5), 1.0)
        with pytest.raises(DegenerateTriple):
            surrounded_circle(t)

    def test_rejects_tilted_base(self):
        t = TangentTriple(Point(0.0, 0.0), Point(2.0, 0.5), Point(1.0, SQRT3), 1.0)
        with pytest.raises(DegenerateTriple):
            surrounded_circle(t)


class TestGapFill:
    def test_validation(self):
        with pytest.raises(InvalidParameter):
            GapFillSpec(N=2, inner_ratio=0.5)
        for bad in (0.4, 1.0, 1.5):
            with pytest.raises(InvalidParameter) as exc:
                GapFillSpec(N=6, inner_ratio=bad)
            assert exc.value.field == "inner_ratio"

    def test_gap_star_segment_count_and_containment(self):
        gap = surrounded_circle(build_triple(1.0))
        star = generate(gap_pattern(GapFillSpec(N=6, inner_ratio=0.5), gap))
        assert len(star) == 12
        for p in endpoints(star):
            assert math.dist(p, gap.center) <= gap.radius + 1e-9


class TestScaledToRadius:
    def test_outermost_circle_inscribes(self):
        spec = table3_spec().circle_pattern
        scaled = scaled_to_radius(spec, 1.0, Point(5.0, 5.0))
        assert max(scaled.radii) == pytest.approx(1.0, abs=1e-12)
        assert scaled.center == (5.0, 5.0)
        # spr scales with the radii, keeping the special-point ring proportional
        assert scaled.special_radius / max(scaled.radii) == pytest.approx(
            spec.special_radius / max(spec.radii), rel=1e-12
        )


class TestFillMotif:
    def test_segment_count(self):
        spec = table3_spec()
        motif = fill_motif(spec, build_triple(spec.R))
        # 3 circles at 4N = 48 each, plus a 12-segment gap star
        assert len(motif) == 3 * 48 + 12

    def test_circle_patterns_stay_within_radius(self):
        spec = table3_spec()
        triple = build_triple(spec.R)
        motif = fill_motif(spec, triple)
        centers = (triple.a, triple.b, triple.c, surrounded_circle(triple).center)
        for p in endpoints(motif):
            assert min(math.dist(p, c) for c in centers) <= spec.R + 1e-9


class TestTilePlane:
    def test_single_cell_equals_motif_plus_down_gap(self):
        spec = table3_spec(rows=1, cols=1, fill_down_gaps=False)
        tiled = tile_plane(spec)
        motif = fill_motif(spec, build_triple(spec.R))
        assert same_segment_set(tiled, motif)

    def test_expected_counts_three_by_three(self):
        spec = table3_spec(rows=3, cols=3)
        tiled = tile_plane(spec)
        per_circle = 48
        circles = (3 + 1) * (3 + 1) - 1
        gaps = 3 * 3 * (12 + 12)
        assert len(tiled) == circles * per_circle + gaps

    def test_no_duplicates(self):
        tiled = tile_plane(table3_spec(rows=2, cols=3))
        seen = SegmentLookup([])
        for s in tiled:
            assert not seen.contains(s)
            key = tuple(sorted(((round(s.a.x / 1e-6), round(s.a.y / 1e-6)),
                                (round(s.b.x / 1e-6), round(s.b.y / 1e-6)))))
            seen.cells.setdefault(key, []).append(s)

    def test_matches_naive_union_oracle(self):
        spec = table3_spec(rows=2, cols=2)
        cell = list(tile_plane(table3_spec(rows=1, cols=1)))
        naive = []
        lookup_pool = []
        # column-major on purpose: output must not depend on loop order
        for col in range(2):
            for row in range(2):
                ox = col * 2.0 * spec.R + row * spec.R
                oy = row * SQRT3 * spec.R
                for s in cell:
                    moved = Segment(
                        Point(s.a.x + ox, s.a.y + oy), Point(s.b.x + ox, s.b.y + oy)
                    )
                    if not SegmentLookup(lookup_pool).contains(moved):
                        lookup_pool.append(moved)
                        naive.append(moved)
        assert same_segment_set(tile_plane(spec), naive)

    def test_shared_circle_coincides_across_adjacent_cells(self):
        spec = table3_spec(rows=1, cols=2)
        base = build_triple(spec.R)
        motif = list(fill_motif(spec, base))
        shifted = [
            Segment(
                Point(s.a.x + 2.0 * spec.R, s.a.y), Point(s.b.x + 2.0 * spec.R, s.b.y)
            )
            for s in motif
        ]
        # circle b of the base cell is circle a of the next: those 48 segments overlap
        overlap = SegmentLookup(motif)
        assert sum(1 for s in shifted if overlap.contains(s)) == 48

    def test_gap_fill_containment(self):
        spec = table3_spec(rows=2, cols=2)
        tiled = tile_plane(spec)
        lookup = SegmentLookup(tiled)
        for row in range(2):
            for col in range(2):
                ox = col * 2.0 * spec.R + row * spec.R
                oy = row * SQRT3 * spec.R
                up = surrounded_circle(build_triple(spec.R, Point(ox, oy)))
                down_center = Point(ox + 2.0 * spec.R, oy + 2.0 * spec.R / SQRT3)
                for center in (up.center, down_center):
                    star = generate(
                        gap_pattern(spec.gap_fill, type(up)(center, up.radius))
                    )
                    for s in star:
                        assert lookup.contains(s)
                    for p in endpoints(star):
                        assert math.dist(p, center) <= up.radius + 1e-9

    def test_down_gaps_toggle(self):
        with_down = tile_plane(table3_spec(rows=1, cols=1, fill_down_gaps=True))
        without = tile_plane(table3_spec(rows=1, cols=1, fill_down_gaps=False))
        assert len(with_down) == len(without) + 12

    def test_motif_cap(self):
        spec = table3_spec()
        capped = TilingSpec(
            circle_pattern=spec.circle_pattern,
            gap_fill=spec.gap_fill,
            R=spec.R,
            rows=3,
            cols=2,
            motif_cap=4,
        )
        with pytest.raises(MotifCapExceeded):
            tile_plane(capped)

    def test_spec_validation(self):
        spec = table3_spec()
        with pytest.raises(InvalidParameter):
            TilingSpec(spec.circle_pattern, spec.gap_fill, R=0.0, rows=1, cols=1)
        with pytest.raises(InvalidParameter):
            TilingSpec(spec.circle_pattern, spec.gap_fill, R=1.0, rows=0, cols=1)
