"""startile: parametric star/rosette patterns, hexagonal tiling, SVG output."""

from .config import (
    MODE_STAR,
    MODE_TILING,
    ConfigDoc,
    RenderOptions,
    TilingParams,
    build_segments,
    collect_warnings,
    config_from_json,
    config_to_json,
    parse_config,
    serialize_config,
    to_tiling_spec,
)
from .errors import (
    ConfigSyntaxError,
    DegenerateLine,
    DegenerateTriple,
    EmptyPattern,
    InvalidParameter,
    MotifCapExceeded,
    NoSpecialCircle,
    ParallelRay,
    StartileError,
    ValidationError,
)
from .geometry import (
    ORIGIN,
    TOLERANCE,
    CircleDivision,
    Point,
    divide_circle_closed,
    divide_circle_iterative,
    normalize_deg,
    polar_point,
)
from .pattern import (
    PatternSpec,
    Segment,
    SegmentSet,
    desired_radii,
    generate,
    ray_line_radii,
    special_points,
)
from .presets import Preset, get_preset, list_presets
from .render import RenderDoc, build_render_doc, doc_to_svg, render_svg
from .service import RenderResponse, serve_render
from .tiling import (
    GAP_RADIUS_RATIO,
    GapFillSpec,
    SurroundedCircle,
    TangentTriple,
    TilingSpec,
    build_triple,
    fill_motif,
    gap_pattern,
    scaled_to_radius,
    surrounded_circle,
    tile_plane,
)

__version__ = "0.1.0"
