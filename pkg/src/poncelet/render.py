"""Standalone SVG figures of a family configuration.

One fixed square viewport [-1.6, 1.6]^2 holds the circumcircle, the caustic,
a member triangle, the equilateral member and locus circles when they exist,
the member's Kiepert parabola as a clipped polyline, and labeled center
markers.  Output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import numpy as np

from .centers import (
    circumcenter,
    kiepert_parabola,
    parabola_vertex,
    x110,
    x1511,
)
from .family import (
    FamilyConfig,
    caustic_of,
    contains_equilateral,
    equilateral_vertices,
    stationary_x110_prediction,
    triangle_at,
)
from .geom import GeometryError

VIEW = 1.6
_EXTENT = 1.58            # clip slightly inside the viewport


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _xy(z: complex) -> tuple[float, float]:
    return (z.real, -z.imag)     # flip: SVG y grows downward


def _polyline(points, stroke: str, width: float = 0.008, dashed: bool = False,
              closed: bool = False) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (_xy(p) for p in points))
    dash = ' stroke-dasharray="0.04 0.03"' if dashed else ""
    tag = "polygon" if closed else "polyline"
    return (f'<{tag} points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_fmt(width)}"{dash}/>')


def _circle(center: complex, radius: float, stroke: str,
            width: float = 0.008, dashed: bool = False) -> str:
    x, y = _xy(center)
    dash = ' stroke-dasharray="0.04 0.03"' if dashed else ""
    return (f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" '
            f'fill="none" stroke="{stroke}" stroke-width="{_fmt(width)}"{dash}/>')


def _ellipse_path(ellipse, stroke: str) -> str:
    pts = ellipse.boundary_points(180)
    return _polyline(list(pts) + [pts[0]], stroke)


def _marker(z: complex, label: str, color: str) -> str:
    x, y = _xy(z)
    return (f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="0.02" fill="{color}"/>'
            f'<text x="{_fmt(x + 0.04)}" y="{_fmt(y - 0.03)}" font-size="0.09" '
            f'font-family="sans-serif" fill="{color}">{label}</text>')


def _parabola_polylines(parabola, stroke: str) -> list[str]:
    ts = np.linspace(-4.0, 4.0, 512)
    pieces: list[str] = []
    run: list[complex] = []
    for t in ts:
        p = parabola.point_at(float(t))
        if abs(p.real) <= _EXTENT and abs(p.imag) <= _EXTENT:
            run.append(p)
        elif len(run) >= 2:
            pieces.append(_polyline(run, stroke))
            run = []
        else:
            run = []
    if len(run) >= 2:
        pieces.append(_polyline(run, stroke))
    return pieces


def render_family_svg(cfg: FamilyConfig, lam: complex = 1j) -> str:
    """SVG document for one family member and the family's loci."""
    member = triangle_at(cfg, lam)
    caustic = caustic_of(cfg)
    equilateral = contains_equilateral(cfg)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-{VIEW} -{VIEW} '
        f'{2 * VIEW} {2 * VIEW}" width="640" height="640">',
        f'<rect x="-{VIEW}" y="-{VIEW}" width="{2 * VIEW}" height="{2 * VIEW}" fill="white"/>',
    ]

    conics = ['<g id="conics">', _circle(0j, 1.0, "black", 0.01),
              _ellipse_path(caustic, "#2e8b57")]
    markers = ['<g id="markers">', _marker(circumcenter(member), "X3", "#333333"),
               _marker(complex(caustic.center), "O", "#2e8b57")]
    try:
        parabola = kiepert_parabola(member)
        conics.extend(_parabola_polylines(parabola, "#ff8c00"))
        markers.append(_marker(x110(member), "X110", "#d62728"))
        markers.append(_marker(parabola_vertex(parabola), "X3233", "#ff8c00"))
        markers.append(_marker(x1511(member), "X1511", "#9467bd"))
    except GeometryError:
        pass
    conics.append("</g>")

    triangles = ['<g id="triangles">',
                 _polyline(member.vertices, "#1f77b4", closed=True)]
    loci = ['<g id="loci">']
    if equilateral:
        try:
            eq = equilateral_vertices(cfg)
            triangles.append(_polyline(eq.vertices, "#8b4513", 0.006, closed=True))
            focus = stationary_x110_prediction(cfg)
            loci.append(_circle(0.75 * focus, 0.25 * abs(focus), "#ff8c00", 0.006, dashed=True))
        except GeometryError:
            pass
    if abs(cfg.focus_product) > 1e-12:
        loci.append(_circle(complex(cfg.focus_sum), abs(cfg.focus_product),
                            "#2ca02c", 0.006, dashed=True))
    triangles.append("</g>")
    loci.append("</g>")
    markers.append("</g>")

    parts.extend(conics)
    parts.extend(triangles)
    parts.extend(loci)
    parts.extend(markers)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
