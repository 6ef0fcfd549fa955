#!/usr/bin/env python3
"""Render a small gallery of weight fans as SVG files.

Each fan shows the six weight rays and the character direction; rays that
share a direction are fanned apart slightly so they stay visible.  Pass
an output directory as the only argument (default: ./fan_gallery_output).
"""

import sys
from pathlib import Path

from conestab import WeightDatum, fan_condition, fan_svg, flag_datum

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fan_gallery_output")
out_dir.mkdir(parents=True, exist_ok=True)

gallery = {
    # the flag datum: A-rays and B-rays coincide in two bundles of three
    "flag": flag_datum(),
    # a generic datum satisfying the constant-sum constraint, with the
    # character strictly between the A-slopes and the B-slopes
    "generic": WeightDatum(
        a=((4, 1), (3, 2), (2, 1)),
        b=((6, 9), (7, 8), (8, 9)),
        c=(1, 1),
    ),
    # an opposite pair A1 = -B1 destroys the apex
    "apexless": WeightDatum(
        a=((2, 1), (0, 1), (1, 2)),
        b=((-2, -1), (2, -1), (1, -2)),
        c=(1, 0),
        constrained=False,
    ),
    # a zero weight cannot be drawn; the SVG carries a warning comment
    "zero_weight": WeightDatum(
        a=((0, 0), (1, 0), (0, 1)),
        b=((1, 1), (2, 0), (0, 2)),
        c=(1, 1),
        constrained=False,
    ),
}

for name, datum in gallery.items():
    for shade in (False, True):
        suffix = "_shaded" if shade else ""
        path = out_dir / f"{name}{suffix}.svg"
        path.write_text(fan_svg(datum, shade=shade))
        print(f"wrote {path}  (fan condition: {fan_condition(datum)})")
