"""Sampled curve tables and their CSV and SVG renderings."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .errors import DomainError

__all__ = ["CurveTable", "format_float", "read_csv", "sample_grid", "to_svg"]


def format_float(x):
    """17 significant digits: enough for an exact round trip of a double."""
    return format(x, ".17g")


def sample_grid(lo, hi, points, log=False):
    """``points`` abscissae from ``lo`` to ``hi`` inclusive (a single row when ``lo == hi``)."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise DomainError(f"invalid range [{lo}, {hi}]")
    if lo == hi or points == 1:
        return [float(lo)]
    if points < 1:
        raise DomainError("need at least one sample point")
    if log:
        if lo <= 0:
            raise DomainError("log sampling needs a positive lower end")
        a, b = math.log(lo), math.log(hi)
        xs = [math.exp(a + (b - a) * i / (points - 1)) for i in range(points)]
    else:
        xs = [lo + (hi - lo) * i / (points - 1) for i in range(points)]
    xs[0], xs[-1] = float(lo), float(hi)
    return xs


@dataclass
class CurveTable:
    """Columns of values sampled on a strictly increasing abscissa.

    ``None`` marks a cell outside a bound's validity window; it is written
    as an empty CSV cell and left out of plots.
    """

    abscissa_name: str
    abscissa: list
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.abscissa, self.abscissa[1:])):
            raise DomainError("abscissa must be strictly increasing")
        for name, col in self.columns.items():
            self._check_column(name, col)

    def _check_column(self, name, values):
        if len(values) != len(self.abscissa):
            raise DomainError(f"column {name!r} has {len(values)} rows, expected {len(self.abscissa)}")
        for v in values:
            if v is not None and not math.isfinite(v):
                raise DomainError(f"column {name!r} contains a non-finite value {v!r}")

    def add_column(self, name, values):
        values = list(values)
        self._check_column(name, values)
        self.columns[name] = values

    def rows(self):
        names = list(self.columns)
        for i, x in enumerate(self.abscissa):
            yield x, {n: self.columns[n][i] for n in names}

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([self.abscissa_name, *self.columns])
        for i, x in enumerate(self.abscissa):
            cells = [format_float(x)]
            for col in self.columns.values():
                v = col[i]
                cells.append("" if v is None else format_float(v))
            writer.writerow(cells)
        return buf.getvalue()

    def write_csv(self, path):
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(self.to_csv())


def read_csv(source):
    """Parse a CSV produced by :meth:`CurveTable.to_csv` (a path or file-like object)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    xs = []
    cols = {name: [] for name in header[1:]}
    for row in reader:
        if not row:
            continue
        xs.append(float(row[0]))
        for name, cell in zip(header[1:], row[1:]):
            cols[name].append(float(cell) if cell != "" else None)
    return CurveTable(header[0], xs, cols)


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _ticks(lo, hi, n=5):
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def to_svg(table, title="", width=800, height=600, logy=False):
    """Minimal standalone SVG 1.1 line chart of every column against the abscissa."""
    left, right, top, bottom = 80, 170, 40, 60
    pw, ph = width - left - right, height - top - bottom

    def ty(v):
        return math.log10(v) if logy else v

    values = [ty(v) for col in table.columns.values() for v in col
              if v is not None and (v > 0 or not logy)]
    xs = table.abscissa
    x0, x1 = min(xs), max(xs)
    y0, y1 = (min(values), max(values)) if values else (0.0, 1.0)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5

    def px(x):
        return left + (x - x0) / (x1 - x0) * pw

    def py(y):
        return top + ph - (y - y0) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{left + pw / 2:.1f}" y="{top - 15}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{escape(title)}</text>',
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}" stroke="black"/>',
    ]
    for x in _ticks(x0, x1):
        out.append(f'<line x1="{px(x):.2f}" y1="{top + ph}" x2="{px(x):.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px(x):.2f}" y="{top + ph + 20}" text-anchor="middle" font-family="sans-serif" '
                   f'font-size="12">{x:.4g}</text>')
    for y in _ticks(y0, y1):
        label = f"1e{y:.2g}" if logy else f"{y:.4g}"
        out.append(f'<line x1="{left - 5}" y1="{py(y):.2f}" x2="{left}" y2="{py(y):.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py(y) + 4:.2f}" text-anchor="end" font-family="sans-serif" '
                   f'font-size="12">{label}</text>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 15}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="14">{escape(table.abscissa_name)}</text>')

    for i, (name, col) in enumerate(table.columns.items()):
        color = _COLORS[i % len(_COLORS)]
        segment = []
        segments = [segment]
        for x, v in zip(xs, col):
            if v is None or (logy and v <= 0):
                segment = []
                segments.append(segment)
                continue
            segment.append(f"{px(x):.2f},{py(ty(v)):.2f}")
        for seg in segments:
            if len(seg) == 1:
                cx, cy = seg[0].split(",")
                out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="{color}"/>')
            elif seg:
                out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{" ".join(seg)}"/>')
        ly = top + 20 + 20 * i
        out.append(f'<line x1="{left + pw + 15}" y1="{ly}" x2="{left + pw + 40}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw + 45}" y="{ly + 4}" font-family="sans-serif" '
                   f'font-size="12">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
