"""Minimal self-contained SVG line plots (no plotting dependency).

Plots are conveniences; the CSV files are the contract. Supports linear
and log axes, legends and dashed lines.
"""

from __future__ import annotations

import math
from datetime import datetime, timezone

import numpy as np

_COLORS = ["#000000", "#c02020", "#2050c0", "#108040", "#b07000", "#703090"]


def _nice_ticks(lo: float, hi: float, n: int = 6):
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    step = 10.0 ** math.floor(math.log10(span / n))
    for mult in (1, 2, 5, 10):
        if span / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    ticks = []
    v = first
    while v <= hi + 1e-9 * span:
        ticks.append(0.0 if abs(v) < 1e-12 * span else v)
        v += step
    return ticks


def _log_ticks(lo: float, hi: float):
    ticks = []
    d = math.floor(math.log10(lo))
    while 10.0**d <= hi * 1.0001:
        if 10.0**d >= lo * 0.9999:
            ticks.append(10.0**d)
        d += 1
    return ticks or [lo, hi]


def _fmt(v: float) -> str:
    if v == 0:
        return "0"
    if 1e-3 <= abs(v) < 1e4:
        s = f"{v:.4g}"
    else:
        s = f"{v:.1e}"
    return s


class _Axis:
    def __init__(self, lo, hi, pix_lo, pix_hi, scale):
        self.scale = scale
        if scale == "log":
            self.lo, self.hi = math.log10(lo), math.log10(hi)
        else:
            self.lo, self.hi = lo, hi
        if self.hi == self.lo:
            self.hi = self.lo + 1.0
        self.pix_lo, self.pix_hi = pix_lo, pix_hi

    def to_pix(self, v):
        x = math.log10(v) if self.scale == "log" else v
        f = (x - self.lo) / (self.hi - self.lo)
        return self.pix_lo + f * (self.pix_hi - self.pix_lo)


def line_plot(series, xlabel="", ylabel="", title="", xscale="linear",
              yscale="linear", width=720, height=480, timestamp=True) -> str:
    """Render series (dicts with x, y, label, optional dash) to an SVG string."""
    ml, mr, mt, mb = 70, 20, 30, 50
    xs = np.concatenate([np.asarray(s["x"], dtype=float) for s in series])
    ys = np.concatenate([np.asarray(s["y"], dtype=float) for s in series])
    if xscale == "log":
        xs = xs[xs > 0]
    if yscale == "log":
        ys = ys[ys > 0]
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if yscale == "linear":
        pad = 0.05 * (y1 - y0 or abs(y1) or 1.0)
        y0, y1 = y0 - pad, y1 + pad
    ax = _Axis(x0, x1, ml, width - mr, xscale)
    ay = _Axis(y0, y1, height - mb, mt, yscale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">']
    if timestamp:
        out.append(f"<!-- generated {datetime.now(timezone.utc).isoformat()} -->")
    out.append(f'<rect width="{width}" height="{height}" fill="white"/>')

    xticks = _log_ticks(x0, x1) if xscale == "log" else _nice_ticks(x0, x1)
    yticks = _log_ticks(10**ay.lo, 10**ay.hi) if yscale == "log" else _nice_ticks(y0, y1)
    for v in xticks:
        px = ax.to_pix(v)
        out.append(f'<line x1="{px:.1f}" y1="{mt}" x2="{px:.1f}" y2="{height-mb}" '
                   'stroke="#dddddd"/>')
        out.append(f'<text x="{px:.1f}" y="{height-mb+16}" text-anchor="middle">{_fmt(v)}</text>')
    for v in yticks:
        py = ay.to_pix(v)
        out.append(f'<line x1="{ml}" y1="{py:.1f}" x2="{width-mr}" y2="{py:.1f}" '
                   'stroke="#dddddd"/>')
        out.append(f'<text x="{ml-6}" y="{py+4:.1f}" text-anchor="end">{_fmt(v)}</text>')
    out.append(f'<rect x="{ml}" y="{mt}" width="{width-ml-mr}" height="{height-mt-mb}" '
               'fill="none" stroke="black"/>')

    for k, s in enumerate(series):
        x = np.asarray(s["x"], dtype=float)
        y = np.asarray(s["y"], dtype=float)
        ok = np.ones(x.size, dtype=bool)
        if xscale == "log":
            ok &= x > 0
        if yscale == "log":
            ok &= y > 0
        pts = " ".join(f"{ax.to_pix(xi):.2f},{ay.to_pix(yi):.2f}"
                       for xi, yi in zip(x[ok], y[ok]))
        color = s.get("color", _COLORS[k % len(_COLORS)])
        dash = f' stroke-dasharray="{s["dash"]}"' if s.get("dash") else ""
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5"{dash}/>')

    ly = mt + 14
    for k, s in enumerate(series):
        if not s.get("label"):
            continue
        color = s.get("color", _COLORS[k % len(_COLORS)])
        dash = f' stroke-dasharray="{s["dash"]}"' if s.get("dash") else ""
        out.append(f'<line x1="{ml+10}" y1="{ly-4}" x2="{ml+40}" y2="{ly-4}" '
                   f'stroke="{color}" stroke-width="1.5"{dash}/>')
        out.append(f'<text x="{ml+46}" y="{ly}">{s["label"]}</text>')
        ly += 16

    if title:
        out.append(f'<text x="{width/2:.0f}" y="18" text-anchor="middle" '
                   f'font-size="14">{title}</text>')
    out.append(f'<text x="{(ml+width-mr)/2:.0f}" y="{height-12}" '
               f'text-anchor="middle">{xlabel}</text>')
    out.append(f'<text x="16" y="{(mt+height-mb)/2:.0f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {(mt+height-mb)/2:.0f})">{ylabel}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
