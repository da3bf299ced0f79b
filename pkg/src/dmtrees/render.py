"""Barcode pictures as plain text or SVG."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .persistence import PersistenceDiagram


class RenderError(ValueError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    width: int | None = None  # characters for ascii, pixels for svg
    show_grid: bool = True

    def resolved_width(self):
        if self.width is not None:
            return self.width
        return 72 if self.format == "ascii" else 640


def _bars(d: PersistenceDiagram):
    """(band, birth, death or None) in drawing order, top row first."""
    rows = [("H0", b, None) for b in d.essential_h0]
    rows += [("H0", b, t) for b, t in d.finite_pairs]
    rows += [("H1", b, None) for b in d.essential_h1]
    return rows


def _horizon(d: PersistenceDiagram):
    times = d.event_times()
    return max(1, math.ceil(max(times))) if times else 1


def render_barcode(d: PersistenceDiagram, spec: RenderSpec = RenderSpec()) -> str:
    if spec.format == "ascii":
        return _ascii(d, spec)
    if spec.format == "svg":
        return _svg(d, spec)
    raise RenderError(f"unknown format {spec.format!r}")


# -- text ------------------------------------------------------------------

_LABEL = 4  # "H0 |"


def _col(t, scale):
    return math.floor(Fraction(t) * scale + Fraction(1, 2))


def _ascii(d, spec):
    horizon = _horizon(d)
    width = spec.resolved_width()
    scale = (width - _LABEL - 1) // horizon
    if scale < 1:
        raise RenderError(
            f"width {width} too small for {horizon + 1} time steps (need {_LABEL + 1 + horizon})"
        )
    span = horizon * scale + 1
    ticks = {t * scale for t in range(horizon + 1)}

    lines = []
    band_seen = set()
    for band, birth, death in _bars(d):
        cells = [":" if spec.show_grid and c in ticks else " " for c in range(span)]
        lo = _col(birth, scale)
        hi = span - 1 if death is None else _col(death, scale)
        for c in range(lo, hi + 1):
            cells[c] = "="
        if death is None:
            cells[span - 1] = ">"
        label = band if band not in band_seen else ""
        band_seen.add(band)
        lines.append(f"{label:<3}|" + "".join(cells).rstrip())

    axis = ["-"] * span
    for c in ticks:
        axis[c] = "+"
    lines.append("    " + "".join(axis))

    numbers = [" "] * (span + 4)
    step = 1
    while len(str(horizon)) + 1 > step * scale:
        step += 1
    for t in range(0, horizon + 1, step):
        text = str(t)
        start = t * scale
        numbers[start:start + len(text)] = text
    lines.append("    " + "".join(numbers).rstrip())
    return "\n".join(lines) + "\n"


# -- svg -------------------------------------------------------------------

def _fmt(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):.4f}".rstrip("0").rstrip(".")


def _svg(d, spec):
    horizon = _horizon(d)
    width = spec.resolved_width()
    bars = _bars(d)
    left, right, top, bottom = Fraction(3, 2), Fraction(1, 2), Fraction(1, 2), Fraction(3, 2)
    units_w = horizon + left + right
    if width < 8 * units_w:
        raise RenderError(f"width {width}px too small; need at least {math.ceil(8 * units_w)}px")
    row = Fraction(1, 2)
    units_h = top + row * (len(bars) + 1) + bottom
    height = math.ceil(width * units_h / units_w)
    base = top + row * (len(bars) + 1)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_fmt(-left)} 0 {_fmt(units_w)} {_fmt(units_h)}">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>",
        f'<line x1="0" y1="{_fmt(base)}" x2="{horizon}" y2="{_fmt(base)}" stroke="black" stroke-width="0.05"/>',
        f'<line x1="0" y1="{_fmt(top)}" x2="0" y2="{_fmt(base)}" stroke="black" stroke-width="0.05"/>',
    ]
    for t in range(horizon + 1):
        if spec.show_grid and t > 0:
            out.append(
                f'<line x1="{t}" y1="{_fmt(top)}" x2="{t}" y2="{_fmt(base)}" stroke="gray" '
                'stroke-width="0.02" stroke-dasharray="0.1,0.1"/>'
            )
        out.append(
            f'<text x="{t}" y="{_fmt(base + Fraction(3, 4))}" font-size="0.4" '
            f'text-anchor="middle">{t}</text>'
        )
    band_rows = {}
    for i, (band, birth, death) in enumerate(bars):
        y = base - row * (i + 1)
        band_rows.setdefault(band, []).append(y)
        end = horizon if death is None else death
        marker = ' marker-end="url(#arrow)"' if death is None else ""
        out.append(
            f'<line x1="{_fmt(birth)}" y1="{_fmt(y)}" x2="{_fmt(end)}" y2="{_fmt(y)}" '
            f'stroke="black" stroke-width="0.15"{marker}/>'
        )
    for band, ys in band_rows.items():
        mid = (min(ys) + max(ys)) / 2
        name = "b0" if band == "H0" else "b1"
        out.append(
            f'<text x="{_fmt(-Fraction(3, 4))}" y="{_fmt(mid + Fraction(3, 20))}" '
            f'font-size="0.45" text-anchor="middle">{name}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
