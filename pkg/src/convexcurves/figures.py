"""Minimal SVG rendering of shapes, point sets and paths."""

from __future__ import annotations

import numpy as np

_COLORS = ("#1f4e79", "#c0392b", "#27ae60", "#8e44ad", "#d35400")


class Figure:
    """Accumulates layers in model coordinates and writes an SVG with y pointing up."""

    def __init__(self, width: int = 640, margin: float = 0.05):
        self.width = width
        self.margin = margin
        self.layers = []

    def polygon(self, vertices, color=None, fill="none"):
        self.layers.append(("polygon", np.asarray(vertices, dtype=float), color or _COLORS[0], fill))
        return self

    def path(self, points, color=None, dashed=False):
        self.layers.append(("path", np.asarray(points, dtype=float), color or _COLORS[1], dashed))
        return self

    def points(self, points, color=None, labels=None):
        self.layers.append(("points", np.asarray(points, dtype=float), color or _COLORS[2], labels))
        return self

    def to_svg(self) -> str:
        allpts = np.vstack([layer[1].reshape(-1, 2) for layer in self.layers])
        lo, hi = allpts.min(axis=0), allpts.max(axis=0)
        span = np.maximum(hi - lo, 1e-12)
        pad = self.margin * span.max()
        lo, span = lo - pad, span + 2 * pad
        scale = self.width / span[0]
        height = max(int(round(span[1] * scale)), 40)
        stroke = max(span) * 0.004 * scale

        def xy(p):
            return f"{(p[0] - lo[0]) * scale:.3f},{(lo[1] + span[1] - p[1]) * scale:.3f}"

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{height}" '
            f'viewBox="0 0 {self.width} {height}">'
        ]
        for kind, pts, color, extra in self.layers:
            coords = " ".join(xy(p) for p in pts)
            if kind == "polygon":
                out.append(f'<polygon points="{coords}" fill="{extra}" stroke="{color}" stroke-width="{stroke:.3f}"/>')
            elif kind == "path":
                dash = f' stroke-dasharray="{4 * stroke:.3f}"' if extra else ""
                out.append(
                    f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="{1.5 * stroke:.3f}"{dash}/>'
                )
            else:
                for i, p in enumerate(pts):
                    x, y = xy(p).split(",")
                    out.append(f'<circle cx="{x}" cy="{y}" r="{2.5 * stroke:.3f}" fill="{color}"/>')
                    if extra is not None:
                        out.append(f'<text x="{x}" y="{y}" dx="{3 * stroke:.1f}" font-size="{8 * stroke:.1f}">{extra[i]}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"
