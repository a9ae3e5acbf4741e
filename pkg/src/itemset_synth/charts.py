"""Dependency-free SVG emitters: radar overlay for metrics, bars for F1 scores."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .characteristics import METRICS, CharacteristicsVector

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass
class RadarChart:
    names: list[str]
    normalized: np.ndarray   # n_series x n_axes, in [0, 1]
    minimums: np.ndarray
    maximums: np.ndarray
    axes: tuple[str, ...] = METRICS

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["#min"] + [repr(float(x)) for x in self.minimums])
        w.writerow(["#max"] + [repr(float(x)) for x in self.maximums])
        w.writerow(("name",) + tuple(self.axes))
        for name, row in zip(self.names, self.normalized):
            w.writerow([name] + [f"{x:.6f}" for x in row])
        return buf.getvalue()

    def to_svg(self, size: int = 480, title: str = "") -> str:
        cx = cy = size / 2
        radius = size * 0.34
        n_axes = len(self.axes)
        angles = [-math.pi / 2 + 2 * math.pi * k / n_axes for k in range(n_axes)]

        def xy(r, a):
            return cx + r * math.cos(a), cy + r * math.sin(a)

        def point(r, a):
            return "{:.2f},{:.2f}".format(*xy(r, a))

        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
               f'height="{size + 20 * len(self.names)}" font-family="sans-serif" font-size="11">']
        if title:
            out.append(f'<text x="{cx}" y="16" text-anchor="middle" font-size="14">'
                       f'{escape(title)}</text>')
        for level in (0.25, 0.5, 0.75, 1.0):
            pts = " ".join(point(radius * level, a) for a in angles)
            out.append(f'<polygon points="{pts}" fill="none" stroke="#ccc"/>')
        for name, a in zip(self.axes, angles):
            x2, y2 = xy(radius, a)
            out.append(f'<line x1="{cx}" y1="{cy}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#ccc"/>')
            lx, ly = xy(radius * 1.15, a)
            out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle">{escape(name)}</text>')
        for s, (name, row) in enumerate(zip(self.names, self.normalized)):
            color = PALETTE[s % len(PALETTE)]
            pts = " ".join(point(radius * v, a) for v, a in zip(row, angles))
            out.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" '
                       f'stroke="{color}" stroke-width="2"><title>{escape(name)}</title></polygon>')
            y = size + 20 * s + 4
            out.append(f'<rect x="10" y="{y}" width="12" height="12" fill="{color}"/>')
            out.append(f'<text x="28" y="{y + 10}">{escape(name)}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def radar_data(named_vectors) -> RadarChart:
    """Min-max normalize each metric over the given (name, vector) pairs.

    An axis whose values are all equal is drawn at 1.0.
    """
    named_vectors = list(named_vectors)
    if not named_vectors:
        raise ValueError("radar chart needs at least one vector")
    names = [n for n, _ in named_vectors]
    values = np.array([np.asarray(v) for _, v in named_vectors], dtype=np.float64)
    lo, hi = values.min(axis=0), values.max(axis=0)
    span = hi - lo
    with np.errstate(invalid="ignore", divide="ignore"):
        norm = np.where(span > 0, (values - lo) / np.where(span > 0, span, 1.0), 1.0)
    return RadarChart(names, norm, lo, hi)


def bar_chart_svg(labels, values, errors=None, title: str = "", width: int = 480,
                  height: int = 300) -> str:
    """Vertical bars on a fixed [0, 1] scale with optional error whiskers."""
    labels = list(labels)
    values = [float(v) for v in values]
    errors = [0.0] * len(values) if errors is None else [float(e) for e in errors]
    left, bottom, top = 40, 60, 30
    plot_h = height - bottom - top
    slot = (width - left - 10) / max(1, len(values))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'font-family="sans-serif" font-size="11">']
    if title:
        out.append(f'<text x="{width / 2}" y="16" text-anchor="middle" font-size="14">'
                   f'{escape(title)}</text>')
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = top + plot_h * (1 - tick)
        out.append(f'<line x1="{left}" y1="{y:.1f}" x2="{width - 10}" y2="{y:.1f}" stroke="#eee"/>')
        out.append(f'<text x="{left - 4}" y="{y + 4:.1f}" text-anchor="end">{tick:.2f}</text>')
    for k, (label, v, e) in enumerate(zip(labels, values, errors)):
        x = left + k * slot + slot * 0.15
        h = plot_h * min(max(v, 0.0), 1.0)
        out.append(f'<rect x="{x:.1f}" y="{top + plot_h - h:.1f}" width="{slot * 0.7:.1f}" '
                   f'height="{h:.1f}" fill="{PALETTE[k % len(PALETTE)]}"/>')
        if e > 0:
            xm = x + slot * 0.35
            y1 = top + plot_h * (1 - min(1.0, v + e))
            y2 = top + plot_h * (1 - max(0.0, v - e))
            out.append(f'<line x1="{xm:.1f}" y1="{y1:.1f}" x2="{xm:.1f}" y2="{y2:.1f}" stroke="#000"/>')
        out.append(f'<text x="{x + slot * 0.35:.1f}" y="{top + plot_h + 14}" '
                   f'text-anchor="middle">{escape(str(label))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def characteristics_radar(rows: list[tuple[str, CharacteristicsVector]], title: str = ""):
    chart = radar_data(rows)
    return chart.to_csv(), chart.to_svg(title=title)
