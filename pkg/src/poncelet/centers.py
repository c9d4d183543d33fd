"""Triangle-center kernel: the classical centers plus the Kimberling centers
X11, X65, X74, X110, X1511 and the Kiepert in-parabola with its vertex X3233.

Only the handful of indices the verification suite needs is implemented; this
is not a general center database.
"""

from __future__ import annotations

from enum import Enum

from .geom import (
    CircleG,
    GeometryError,
    HLine,
    ParabolaG,
    Triangle,
    line_through,
    reflect_point_in_line,
    resolve_tolerance,
)


class CenterIndex(Enum):
    X1 = "X1"
    X2 = "X2"
    X3 = "X3"
    X4 = "X4"
    X5 = "X5"
    X11 = "X11"
    X65 = "X65"
    X74 = "X74"
    X110 = "X110"
    X1511 = "X1511"
    X3233 = "X3233"

    @classmethod
    def from_name(cls, name: str) -> "CenterIndex":
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise GeometryError(f"unknown center index {name!r}") from None


# Centers whose formulas blow up on isoceles or equilateral members.
SINGULAR_AT_ISOCELES = frozenset(
    {CenterIndex.X74, CenterIndex.X110, CenterIndex.X1511, CenterIndex.X3233}
)
SINGULAR_AT_EQUILATERAL = SINGULAR_AT_ISOCELES | {CenterIndex.X11}


def _require_nondegenerate(t: Triangle) -> None:
    if t.is_degenerate():
        raise GeometryError("center undefined for a degenerate triangle")


def centroid(t: Triangle) -> complex:
    return (t.v1 + t.v2 + t.v3) / 3.0


def circumcenter(t: Triangle) -> complex:
    _require_nondegenerate(t)
    (x1, y1), (x2, y2), (x3, y3) = ((v.real, v.imag) for v in t.vertices)
    d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
    s1, s2, s3 = (abs(v) ** 2 for v in t.vertices)
    ux = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / d
    uy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / d
    return complex(ux, uy)


def circumradius(t: Triangle) -> float:
    return abs(t.v1 - circumcenter(t))


def orthocenter(t: Triangle) -> complex:
    return t.v1 + t.v2 + t.v3 - 2.0 * circumcenter(t)


def nine_point_center(t: Triangle) -> complex:
    return 0.5 * (circumcenter(t) + orthocenter(t))


def incenter(t: Triangle) -> complex:
    _require_nondegenerate(t)
    a, b, c = t.side_lengths()
    return (a * t.v1 + b * t.v2 + c * t.v3) / (a + b + c)


def inradius(t: Triangle) -> float:
    a, b, c = t.side_lengths()
    return 2.0 * abs(t.signed_area()) / (a + b + c)


def classical_centers(t: Triangle) -> dict[CenterIndex, complex]:
    """X1 (incenter) through X5 (nine-point center) in one pass."""
    x3 = circumcenter(t)
    x4 = t.v1 + t.v2 + t.v3 - 2.0 * x3
    return {
        CenterIndex.X1: incenter(t),
        CenterIndex.X2: centroid(t),
        CenterIndex.X3: x3,
        CenterIndex.X4: x4,
        CenterIndex.X5: 0.5 * (x3 + x4),
    }


def is_acute(t: Triangle) -> bool:
    a2, b2, c2 = (s * s for s in t.side_lengths())
    return a2 < b2 + c2 and b2 < c2 + a2 and c2 < a2 + b2


def is_obtuse(t: Triangle) -> bool:
    a2, b2, c2 = (s * s for s in t.side_lengths())
    return a2 > b2 + c2 or b2 > c2 + a2 or c2 > a2 + b2


# ---------------------------------------------------------------------------
# Kiepert in-parabola centers
# ---------------------------------------------------------------------------

# Homogeneous barycentric coordinates are plain (u, v, w) triples, defined up
# to scale; conversion to a point needs u + v + w != 0.

def point_from_barycentric(t: Triangle, coords) -> complex:
    u, v, w = coords
    total = u + v + w
    if total == 0.0:
        raise GeometryError("barycentric point at infinity: u + v + w = 0")
    return (u * t.v1 + v * t.v2 + w * t.v3) / total


def barycentric_coords(t: Triangle, p: complex) -> tuple[float, float, float]:
    """Normalized barycentric coordinates of p (signed-area ratios)."""
    _require_nondegenerate(t)
    v1, v2, v3 = t.vertices
    denom = ((v2 - v1).conjugate() * (v3 - v1)).imag
    return (
        ((v2 - p).conjugate() * (v3 - p)).imag / denom,
        ((v3 - p).conjugate() * (v1 - p)).imag / denom,
        ((v1 - p).conjugate() * (v2 - p)).imag / denom,
    )


# Relative threshold below which the X110 barycentric formula is replaced by
# its vertex limit (two side lengths nearly equal -> 0/0).
ISOCELES_FALLBACK_REL = 1e-7


def x110(t: Triangle) -> complex:
    """Focus of the Kiepert in-parabola, on the circumcircle.

    Barycentric (a^2/(b^2-c^2) : b^2/(c^2-a^2) : c^2/(a^2-b^2)).  Near an
    isoceles triangle the formula degenerates and the limit point is the
    apex vertex, which is returned instead; exactly equilateral input is an
    error.
    """
    _require_nondegenerate(t)
    a, b, c = t.side_lengths()
    a2, b2, c2 = a * a, b * b, c * c
    diffs = (b2 - c2, c2 - a2, a2 - b2)   # vanishing i-th entry -> apex at vertex i
    scale = (a * b * c) ** (2.0 / 3.0)
    mags = sorted(abs(d) for d in diffs)
    if mags[1] < ISOCELES_FALLBACK_REL * scale:
        raise GeometryError("X110 undefined for an equilateral triangle")
    if mags[0] < ISOCELES_FALLBACK_REL * scale:
        apex = min(range(3), key=lambda i: abs(diffs[i]))
        return t.vertices[apex]
    return point_from_barycentric(t, (a2 / diffs[0], b2 / diffs[1], c2 / diffs[2]))


def euler_line(t: Triangle) -> HLine:
    """Line through X2 and X3 (with X4 and X5 on it)."""
    x2, x3 = centroid(t), circumcenter(t)
    if abs(x2 - x3) <= resolve_tolerance(None) * max(t.side_lengths()):
        raise GeometryError("Euler line undefined for an equilateral triangle")
    return line_through(x2, x3)


def kiepert_parabola(t: Triangle) -> ParabolaG:
    """The in-parabola with focus X110 and the Euler line as directrix."""
    return ParabolaG(x110(t), euler_line(t))


def parabola_vertex(p: ParabolaG) -> complex:
    return p.vertex()


def x3233(t: Triangle) -> complex:
    """Vertex of the Kiepert in-parabola (computed geometrically)."""
    return parabola_vertex(kiepert_parabola(t))


def x1511(t: Triangle) -> complex:
    """Midpoint of X3 and X110."""
    return 0.5 * (circumcenter(t) + x110(t))


def x74(t: Triangle) -> complex:
    """Antipode of X110 on the circumcircle."""
    return 2.0 * circumcenter(t) - x110(t)


# ---------------------------------------------------------------------------
# Contact and tangential triangles
# ---------------------------------------------------------------------------

def contact_triangle(t: Triangle) -> Triangle:
    """Touch points of the incircle, one per side (opposite-vertex order)."""
    _require_nondegenerate(t)
    i = incenter(t)
    sides = t.sidelines()
    return Triangle(*(line.project(i) for line in sides))


def tangential_triangle(t: Triangle, circle: CircleG,
                        tol: float | None = None) -> Triangle:
    """Triangle bounded by the tangents to ``circle`` at the vertices of ``t``.

    Vertices must lie on the circle; an antipodal vertex pair (right triangle)
    makes two tangents parallel and is an error.
    """
    tol = resolve_tolerance(tol)
    c, r = circle.center, circle.radius
    units = []
    for v in t.vertices:
        if abs(abs(v - c) - r) > 1e-6 * r:
            raise GeometryError("tangential triangle needs vertices on the circle")
        units.append((v - c) / r)
    out = []
    for i, j in ((1, 2), (2, 0), (0, 1)):     # vertex opposite t.vertices[k]
        s = units[i] + units[j]
        if abs(s) <= tol:
            raise GeometryError("tangential degenerate: antipodal vertex pair")
        out.append(c + r * 2.0 * units[i] * units[j] / s)
    return Triangle(*out)


def x11_feuerbach(t: Triangle) -> complex:
    """Tangency point of the incircle and the nine-point circle."""
    n = nine_point_center(t)
    i = incenter(t)
    gap = abs(i - n)
    if gap <= resolve_tolerance(None) * max(t.side_lengths()):
        raise GeometryError("Feuerbach point undefined: incircle and nine-point circle concentric")
    return n + 0.5 * circumradius(t) * (i - n) / gap


def x65(t: Triangle) -> complex:
    """Orthocenter of the contact triangle."""
    return orthocenter(contact_triangle(t))


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

_DISPATCH = {
    CenterIndex.X1: incenter,
    CenterIndex.X2: centroid,
    CenterIndex.X3: circumcenter,
    CenterIndex.X4: orthocenter,
    CenterIndex.X5: nine_point_center,
    CenterIndex.X11: x11_feuerbach,
    CenterIndex.X65: x65,
    CenterIndex.X74: x74,
    CenterIndex.X110: x110,
    CenterIndex.X1511: x1511,
    CenterIndex.X3233: x3233,
}


def center_point(t: Triangle, idx: CenterIndex) -> complex:
    return _DISPATCH[idx](t)


def focal_reflection_residual(t: Triangle) -> float:
    """Max distance from the Euler line to the reflections of X110 in the
    sidelines; near zero iff the Kiepert parabola is tangent to all sides."""
    focus = x110(t)
    directrix = euler_line(t)
    return max(directrix.distance(reflect_point_in_line(focus, side))
               for side in t.sidelines())
