"""Bare-bones SVG line charts (axes, ticks, legend, one polyline per series)."""
import math
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=80, right=170, top=40, bottom=60)
COLORS = ["#1f4e9c", "#c0392b", "#27864a", "#8e44ad", "#d68910", "#5d6d7e"]


def _ticks(lo, hi, n=5):
    if hi == lo:
        return [lo]
    step = 10 ** math.floor(math.log10((hi - lo) / n))
    for mult in (1, 2, 5, 10):
        if (hi - lo) / (step * mult) <= n:
            step *= mult
            break
    start = math.ceil(lo / step) * step
    return list(np.arange(start, hi + 0.5 * step, step))


def line_chart(x, series, title="", xlabel="", ylabel="", logx=True):
    """Return an SVG document (str) plotting each ``series[name]`` against ``x``."""
    x = np.asarray(x, dtype=float)
    xs = np.log10(x) if logx else x
    ys = [np.asarray(y, dtype=float) for y in series.values()]
    ymin = min(float(np.nanmin(y)) for y in ys)
    ymax = max(float(np.nanmax(y)) for y in ys)
    if ymin == ymax:
        ymin, ymax = ymin - 1.0, ymax + 1.0
    pad = 0.05 * (ymax - ymin)
    ymin, ymax = ymin - pad, ymax + pad
    x0, x1 = float(xs.min()), float(xs.max())

    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def px(u):
        return MARGIN["left"] + (u - x0) / (x1 - x0) * pw

    def py(u):
        return MARGIN["top"] + (ymax - u) / (ymax - ymin) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'font-family="sans-serif" font-size="12">',
           f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
           f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>']
    left, bottom = MARGIN["left"], MARGIN["top"] + ph
    out.append(f'<rect x="{left}" y="{MARGIN["top"]}" width="{pw}" height="{ph}" '
               f'fill="none" stroke="black"/>')

    xticks = range(math.ceil(x0), math.floor(x1) + 1) if logx else _ticks(x0, x1)
    for t in xticks:
        label = f"1e{int(t)}" if logx else f"{t:g}"
        out.append(f'<line x1="{px(t):.1f}" y1="{bottom}" x2="{px(t):.1f}" y2="{bottom + 5}" stroke="black"/>')
        out.append(f'<text x="{px(t):.1f}" y="{bottom + 18}" text-anchor="middle">{label}</text>')
    for t in _ticks(ymin, ymax):
        out.append(f'<line x1="{left - 5}" y1="{py(t):.1f}" x2="{left}" y2="{py(t):.1f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py(t) + 4:.1f}" text-anchor="end">{t:.3g}</text>')
    if ymin < 0 < ymax:
        out.append(f'<line x1="{left}" y1="{py(0):.1f}" x2="{left + pw}" y2="{py(0):.1f}" '
                   f'stroke="#999" stroke-dasharray="4,3"/>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="18" y="{MARGIN["top"] + ph / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {MARGIN["top"] + ph / 2:.1f})">{escape(ylabel)}</text>')

    for k, (name, y) in enumerate(zip(series, ys)):
        color = COLORS[k % len(COLORS)]
        ok = np.isfinite(y)
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(xs[ok], y[ok]))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.6" points="{pts}"/>')
        ly = MARGIN["top"] + 15 + 18 * k
        lx = left + pw + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 28}" y="{ly + 4}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
