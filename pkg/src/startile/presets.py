"""Built-in parameter presets.

Values are taken verbatim from the published parameter tables, including
rows whose printed radius list and circle count disagree; the ``notes``
field records the adjustment applied in that case (only the first S radii
are used, or S is clamped to the number of radii actually printed).
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import MODE_STAR, MODE_TILING, ConfigDoc, TilingParams
from .errors import InvalidParameter
from .pattern import PatternSpec


@dataclass(frozen=True)
class Preset:
    name: str
    config: ConfigDoc
    provenance: str
    notes: str = ""


def _star(n, s, radii, alpha, spr, special) -> ConfigDoc:
    return ConfigDoc(
        MODE_STAR,
        PatternSpec(N=n, S=s, radii=radii, alpha=alpha, spr=spr, special=special),
    )


def _tiling(n, s, radii, alpha, spr, special) -> ConfigDoc:
    return ConfigDoc(
        MODE_TILING,
        PatternSpec(N=n, S=s, radii=radii, alpha=alpha, spr=spr, special=special),
        TilingParams(R=200.0, rows=3, cols=3, gap_N=6, inner_ratio=0.5),
    )


_PRESETS = (
    Preset(
        "table1-part1",
        _star(8, 3, (51.0, 70.0, 172.0), 0.0, 0.0, None),
        "Table 1, part 1 (Figure 7, part 1)",
    ),
    Preset(
        "table1-part2",
        _star(9, 2, (93.0, 225.0), 48.0, -68.0, 2),
        "Table 1, part 2 (Figure 7, part 2)",
        "printed row also lists r4 = 180; only the first S = 2 radii are used",
    ),
    Preset(
        "table2-left",
        _star(9, 3, (191.0, 189.0, 226.0), 34.0, 89.0, 3),
        "Table 2, left (Figure 11, left)",
    ),
    Preset(
        "table2-right",
        _star(10, 4, (172.0, 109.0, 133.0, 125.0), 62.0, -100.0, 2),
        "Table 2, right (Figure 11, right)",
    ),
    Preset(
        "table3-1",
        _tiling(12, 2, (171.0, 23.0), 53.0, -50.0, 2),
        "Table 3, row 1 (Figure 12)",
        "printed row also lists r3 = 214; only the first S = 2 radii are used",
    ),
    Preset(
        "table3-2",
        _tiling(6, 3, (143.0, 145.0, 179.0), 10.0, -70.0, 2),
        "Table 3, row 2 (Figure 13)",
        "printed S = 4 but only three radii are given; S clamped to 3",
    ),
    Preset(
        "table3-3",
        _tiling(12, 3, (123.0, 85.0, 178.0), 23.0, -7.0, 2),
        "Table 3, row 3 (Figure 14)",
    ),
)


def list_presets() -> list[Preset]:
    """All built-in presets, in table order."""
    return list(_PRESETS)


def get_preset(name: str) -> Preset:
    for preset in _PRESETS:
        if preset.name == name:
            return preset
    known = ", ".join(p.name for p in _PRESETS)
    raise InvalidParameter(f"unknown preset {name!r} (known: {known})", field="preset")
