"""
Drawing barcodes
================

Text and SVG barcodes for an admissible and an inadmissible diagram.
The SVG files land next to this script.
"""

from pathlib import Path

from dmtrees import corpus
from dmtrees.persistence import is_consistent
from dmtrees.render import RenderSpec, render_barcode

good = corpus.admissible_barcode()
bad = corpus.inadmissible_barcode()

for name, d in [("admissible", good), ("inadmissible", bad)]:
    print(f"{name}: {d}  consistent on 11 simplices: {is_consistent(d, 11)}")
    print(render_barcode(d, RenderSpec(width=60)))
    out = Path(__file__).with_name(f"{name}.svg")
    out.write_text(render_barcode(d, RenderSpec("svg")), encoding="utf-8")
    print("wrote", out.name)
