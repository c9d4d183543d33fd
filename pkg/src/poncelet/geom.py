"""Planar geometric kernel on complex coordinates.

Points are plain ``complex`` numbers measured in unit-circle lengths.
Lines are homogeneous triples l*x + m*y + n = 0 up to scale, conics are
symmetric 3x3 coefficient matrices up to scale.  Every operation is a pure
function of its inputs; all values are immutable after construction, so the
whole module is safe to call from parallel sweep workers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

# Kernel-wide degeneracy tolerance on normalized determinants / areas.
# Claim-level checks run one to two orders looser than this.
DEGENERACY_TOL = 1e-10

TWO_PI = 2.0 * math.pi


class GeometryError(ValueError):
    """A construction is degenerate or undefined for the given inputs."""


def resolve_tolerance(tol: float | None) -> float:
    """The given tolerance, or the current kernel-wide constant."""
    return DEGENERACY_TOL if tol is None else tol


def set_kernel_tolerance(tol: float) -> None:
    """Process-wide override of the degeneracy tolerance (the CLI flag).

    Operations stay pure given this constant; it is rebound once at startup,
    never during a computation.
    """
    global DEGENERACY_TOL
    if not (tol > 0.0 and math.isfinite(tol)):
        raise GeometryError("kernel tolerance must be a positive finite number")
    DEGENERACY_TOL = float(tol)


def principal_angle(theta: float) -> float:
    """Reduce an angle to the signed interval (-pi, pi], counterclockwise positive."""
    a = math.fmod(theta, TWO_PI)
    if a > math.pi:
        a -= TWO_PI
    elif a <= -math.pi:
        a += TWO_PI
    return a


# ---------------------------------------------------------------------------
# Lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HLine:
    """Homogeneous line l*x + m*y + n = 0, defined up to nonzero scale."""

    l: float
    m: float
    n: float

    def __post_init__(self) -> None:
        if not all(map(math.isfinite, (self.l, self.m, self.n))):
            raise GeometryError("line coefficients must be finite")
        if math.hypot(self.l, self.m) == 0.0:
            raise GeometryError("line has zero normal vector (l, m)")

    def normalized(self) -> "HLine":
        """Representative with l^2 + m^2 = 1 and the larger of |l|, |m| positive."""
        s = math.hypot(self.l, self.m)
        lead = self.l if abs(self.l) >= abs(self.m) else self.m
        s = math.copysign(s, lead)
        return HLine(self.l / s, self.m / s, self.n / s)

    def signed_distance(self, p: complex) -> float:
        s = math.hypot(self.l, self.m)
        return (self.l * p.real + self.m * p.imag + self.n) / s

    def distance(self, p: complex) -> float:
        return abs(self.signed_distance(p))

    def contains(self, p: complex, tol: float | None = None) -> bool:
        return self.distance(p) <= resolve_tolerance(tol)

    def unit_normal(self) -> complex:
        v = complex(self.l, self.m)
        return v / abs(v)

    def direction(self) -> complex:
        """Unit direction along the line (normal rotated by +90 degrees)."""
        return 1j * self.unit_normal()

    def project(self, p: complex) -> complex:
        """Orthogonal projection of p onto the line."""
        return p - self.signed_distance(p) * self.unit_normal()

    def as_array(self) -> np.ndarray:
        return np.array([self.l, self.m, self.n], dtype=float)


def line_through(p: complex, q: complex) -> HLine:
    if abs(p - q) == 0.0:
        raise GeometryError("two distinct points are required to define a line")
    return line_point_direction(p, q - p)


def line_point_direction(p: complex, d: complex) -> HLine:
    if abs(d) == 0.0:
        raise GeometryError("zero direction vector")
    normal = 1j * d
    return HLine(normal.real, normal.imag,
                 -(normal.real * p.real + normal.imag * p.imag))


def line_point_normal(p: complex, normal: complex) -> HLine:
    if abs(normal) == 0.0:
        raise GeometryError("zero normal vector")
    return HLine(normal.real, normal.imag,
                 -(normal.real * p.real + normal.imag * p.imag))


def perpendicular_bisector(p: complex, q: complex) -> HLine:
    if abs(p - q) == 0.0:
        raise GeometryError("perpendicular bisector of coincident points")
    return line_point_normal((p + q) / 2.0, q - p)


def reflect_point_in_line(p: complex, line: HLine) -> complex:
    """Mirror image of p across the line; an involution."""
    ln = line.normalized()
    d = ln.l * p.real + ln.m * p.imag + ln.n
    return p - 2.0 * d * complex(ln.l, ln.m)


def rotate_about(p: complex, c: complex, theta: float) -> complex:
    """Rotate p about c by theta, counterclockwise positive."""
    return c + cmath.exp(1j * theta) * (p - c)


def external_bisector(vertex: complex, p: complex, q: complex,
                      tol: float | None = None) -> HLine:
    """External bisector of the angle p-vertex-q, as a line through the vertex.

    The direction is the normalized difference of the two unit ray
    directions, which is perpendicular to the internal bisector whenever
    both exist and extends continuously to the straight-angle case.
    """
    tol = resolve_tolerance(tol)
    dp = p - vertex
    dq = q - vertex
    if abs(dp) <= tol or abs(dq) <= tol:
        raise GeometryError("bisector endpoints must differ from the vertex")
    ext = dp / abs(dp) - dq / abs(dq)
    if abs(ext) <= tol:
        raise GeometryError("external bisector undefined: rays coincide")
    return line_point_direction(vertex, ext / abs(ext))


# ---------------------------------------------------------------------------
# Circles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CircleG:
    center: complex
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise GeometryError("circle radius must be positive and finite")

    def contains(self, p: complex, tol: float | None = None) -> bool:
        return abs(abs(p - self.center) - self.radius) <= resolve_tolerance(tol)

    def point_at(self, phase: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * phase)


UNIT_CIRCLE = CircleG(0j, 1.0)


def ray_circle_intersection(origin: complex, through: complex,
                            circle: CircleG, tol: float | None = None) -> complex:
    """First intersection of the ray origin->through with the circle.

    For an origin inside the circle this is the unique forward exit point.
    Raises if the ray misses the circle entirely.
    """
    tol = resolve_tolerance(tol)
    if abs(through - origin) <= tol:
        raise GeometryError("ray direction undefined: origin equals through-point")
    d = (through - origin) / abs(through - origin)
    oc = origin - circle.center
    b = (d.conjugate() * oc).real            # t^2 + 2 b t + c = 0 along the ray
    c = abs(oc) ** 2 - circle.radius ** 2
    disc = b * b - c
    if disc < -tol:
        raise GeometryError("ray misses the circle")
    disc = max(disc, 0.0)
    root = math.sqrt(disc)
    hits = [t for t in (-b - root, -b + root) if t >= -tol]
    if not hits:
        raise GeometryError("ray points away from the circle")
    return origin + min(hits) * d


# ---------------------------------------------------------------------------
# Conics as symmetric matrices
# ---------------------------------------------------------------------------

def _adjugate3(m: np.ndarray) -> np.ndarray:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return np.array([
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ], dtype=float)


@dataclass(frozen=True, eq=False)
class ConicQ:
    """Projective conic x^T M x = 0 on homogeneous (x, y, 1).

    The stored matrix is symmetric, Frobenius-normalized, and carries a fixed
    sign convention (largest-magnitude entry positive) so proportionality
    tests and residuals are scale-free.
    """

    matrix: np.ndarray

    @staticmethod
    def from_matrix(m: np.ndarray | list) -> "ConicQ":
        arr = np.asarray(m, dtype=float)
        if arr.shape != (3, 3):
            raise GeometryError("conic matrix must be 3x3")
        arr = 0.5 * (arr + arr.T)
        nrm = float(np.linalg.norm(arr))
        if nrm <= 0.0 or not np.all(np.isfinite(arr)):
            raise GeometryError("conic matrix must be finite and nonzero")
        arr = arr / nrm
        flat = arr.ravel()
        lead = flat[int(np.argmax(np.abs(flat)))]
        if lead < 0.0:
            arr = -arr
        arr.setflags(write=False)
        return ConicQ(arr)

    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def is_degenerate(self, tol: float | None = None) -> bool:
        return abs(self.determinant()) < resolve_tolerance(tol)

    def adjugate(self) -> np.ndarray:
        return _adjugate3(self.matrix)

    def evaluate(self, p: complex) -> float:
        """Quadratic-form residual at p (zero on the conic)."""
        v = np.array([p.real, p.imag, 1.0])
        return float(v @ self.matrix @ v)

    def proportionality_residual(self, other: "ConicQ") -> float:
        """How far the two (normalized) matrices are from +-equality."""
        a, b = self.matrix, other.matrix
        return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def conic_from_circle(circle: CircleG) -> ConicQ:
    cx, cy, r = circle.center.real, circle.center.imag, circle.radius
    return ConicQ.from_matrix([
        [1.0, 0.0, -cx],
        [0.0, 1.0, -cy],
        [-cx, -cy, cx * cx + cy * cy - r * r],
    ])


def conic_from_ellipse(ellipse: "EllipseG") -> ConicQ:
    c, s = math.cos(ellipse.theta), math.sin(ellipse.theta)
    cx, cy = ellipse.center.real, ellipse.center.imag
    # world = R * local + center  =>  local = R^T (world - center)
    h_inv = np.array([
        [c, s, -(c * cx + s * cy)],
        [-s, c, (s * cx - c * cy)],
        [0.0, 0.0, 1.0],
    ])
    d = np.diag([1.0 / ellipse.a ** 2, 1.0 / ellipse.b ** 2, -1.0])
    return ConicQ.from_matrix(h_inv.T @ d @ h_inv)


def conic_from_parabola(parabola: "ParabolaG") -> ConicQ:
    ln = parabola.directrix.normalized()
    l, m, n = ln.l, ln.m, ln.n
    fx, fy = parabola.focus.real, parabola.focus.imag
    # |z - focus|^2 = (l x + m y + n)^2 expanded into matrix form
    return ConicQ.from_matrix([
        [m * m, -l * m, -(fx + l * n)],
        [-l * m, l * l, -(fy + m * n)],
        [-(fx + l * n), -(fy + m * n), fx * fx + fy * fy - n * n],
    ])


def polar_line(p: complex, conic: ConicQ, tol: float | None = None) -> HLine:
    """Polar line of the point p with respect to a nondegenerate conic."""
    tol = resolve_tolerance(tol)
    if conic.is_degenerate(tol):
        raise GeometryError("polar line undefined for a degenerate conic")
    v = conic.matrix @ np.array([p.real, p.imag, 1.0])
    if math.hypot(v[0], v[1]) <= tol * max(1.0, abs(v[2])):
        raise GeometryError("polar line at infinity (point is the conic center)")
    return HLine(float(v[0]), float(v[1]), float(v[2]))


def pole(line: HLine, conic: ConicQ, tol: float | None = None) -> complex:
    """Pole of the line with respect to a nondegenerate conic."""
    tol = resolve_tolerance(tol)
    if conic.is_degenerate(tol):
        raise GeometryError("pole undefined for a degenerate conic")
    v = conic.adjugate() @ line.normalized().as_array()
    if abs(v[2]) <= tol * np.linalg.norm(v):
        raise GeometryError("pole at infinity")
    return complex(v[0] / v[2], v[1] / v[2])


def polar_image_of_conic(conic: ConicQ, wrt: CircleG,
                         tol: float | None = None) -> ConicQ:
    """Conic enveloped by the polars of the input conic's points.

    Equals W adj(C) W for the circle matrix W; applying it twice returns a
    scalar multiple of the input (duality is an involution).
    """
    if conic.is_degenerate(resolve_tolerance(tol)):
        raise GeometryError("polar image undefined for a degenerate conic")
    w = conic_from_circle(wrt).matrix
    return ConicQ.from_matrix(w @ conic.adjugate() @ w)


def line_conic_tangency_residual(line: HLine, conic: ConicQ) -> float:
    """Scale-normalized L adj(C) L^T; zero iff the line is tangent to the conic."""
    adj = conic.adjugate()
    nrm = np.linalg.norm(adj)
    if nrm == 0.0:
        raise GeometryError("conic adjugate vanishes (rank <= 1)")
    v = line.normalized().as_array()
    return float(v @ (adj / nrm) @ v)


# ---------------------------------------------------------------------------
# Geometric conic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EllipseG:
    center: complex
    a: float            # semi-major
    b: float            # semi-minor
    theta: float        # major-axis direction, radians

    def __post_init__(self) -> None:
        if not (self.a >= self.b > 0.0):
            raise GeometryError("ellipse requires a >= b > 0")

    def foci(self) -> tuple[complex, complex]:
        c = math.sqrt(max(self.a * self.a - self.b * self.b, 0.0))
        off = c * cmath.exp(1j * self.theta)
        return (self.center - off, self.center + off)

    def point_at(self, t: float) -> complex:
        local = complex(self.a * math.cos(t), self.b * math.sin(t))
        return self.center + local * cmath.exp(1j * self.theta)

    def boundary_points(self, count: int = 64) -> np.ndarray:
        ts = np.linspace(0.0, TWO_PI, count, endpoint=False)
        rot = cmath.exp(1j * self.theta)
        return self.center + (self.a * np.cos(ts) + 1j * self.b * np.sin(ts)) * rot


@dataclass(frozen=True)
class ParabolaG:
    focus: complex
    directrix: HLine

    def __post_init__(self) -> None:
        if self.directrix.distance(self.focus) <= DEGENERACY_TOL:
            raise GeometryError("parabola focus may not lie on the directrix")

    def focal_parameter(self) -> float:
        """Distance from vertex to focus (half the focus-directrix distance)."""
        return 0.5 * self.directrix.distance(self.focus)

    def vertex(self) -> complex:
        return 0.5 * (self.focus + self.directrix.project(self.focus))

    def axis_direction(self) -> complex:
        """Unit vector from the vertex toward the focus."""
        v = self.focus - self.directrix.project(self.focus)
        return v / abs(v)

    def point_at(self, t: float) -> complex:
        """Point at transverse coordinate t (vertex at t = 0)."""
        u = self.axis_direction()
        return self.vertex() + t * (1j * u) + (t * t / (4.0 * self.focal_parameter())) * u


def conic_to_geometric(conic: ConicQ, tol: float | None = None):
    """Recover the geometric form of a conic matrix.

    Returns an ``EllipseG`` or ``ParabolaG``, or a classification tag
    ("degenerate", "hyperbola", "imaginary_ellipse") when no real ellipse or
    parabola exists.
    """
    tol = resolve_tolerance(tol)
    m = conic.matrix
    if abs(np.linalg.det(m)) < tol:
        return "degenerate"
    block = m[:2, :2]
    j = float(np.linalg.det(block))

    if abs(j) <= tol:
        return _parabola_from_matrix(m, tol)

    if j < 0.0:
        return "hyperbola"

    center = np.linalg.solve(block, -m[:2, 2])
    x0, y0 = float(center[0]), float(center[1])
    v = np.array([x0, y0, 1.0])
    const = float(v @ m @ v)
    if abs(const) < tol:
        return "degenerate"
    evals, evecs = np.linalg.eigh(block)
    scaled = -const / evals                  # semi-axis^2 along each eigenvector
    if np.any(scaled <= 0.0):
        return "imaginary_ellipse"
    order = np.argsort(scaled)[::-1]
    a, b = math.sqrt(scaled[order[0]]), math.sqrt(scaled[order[1]])
    major = evecs[:, order[0]]
    theta = math.atan2(major[1], major[0]) % math.pi
    return EllipseG(complex(x0, y0), a, b, theta)


def _parabola_from_matrix(m: np.ndarray, tol: float):
    evals, evecs = np.linalg.eigh(m[:2, :2])
    k = int(np.argmax(np.abs(evals)))        # the nonzero eigenvalue
    mu = float(evals[k])
    n_ax = evecs[:, k]                       # transverse direction
    t_ax = evecs[:, 1 - k]                   # axis direction (zero eigenvalue)
    lin = 2.0 * m[:2, 2]
    d_lin = float(lin @ n_ax)
    e_lin = float(lin @ t_ax)
    if abs(e_lin) < tol:
        return "degenerate"
    f_const = float(m[2, 2])
    xi_v = -d_lin / (2.0 * mu)
    eta_v = -(f_const - d_lin * d_lin / (4.0 * mu)) / e_lin
    vertex = complex(*(xi_v * n_ax + eta_v * t_ax))
    p4 = -e_lin / mu                         # opening: xi^2 = p4 * eta
    axis = complex(*t_ax)
    focus = vertex + (p4 / 4.0) * axis
    directrix_pt = vertex - (p4 / 4.0) * axis
    return ParabolaG(focus, line_point_normal(directrix_pt, axis))


# ---------------------------------------------------------------------------
# Triangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    """Three oriented vertices; counterclockwise for family members."""

    v1: complex
    v2: complex
    v3: complex

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        return (self.v1, self.v2, self.v3)

    def side_lengths(self) -> tuple[float, float, float]:
        """(a, b, c) with a opposite v1, b opposite v2, c opposite v3."""
        return (abs(self.v2 - self.v3), abs(self.v3 - self.v1), abs(self.v1 - self.v2))

    def signed_area(self) -> float:
        u = self.v2 - self.v1
        w = self.v3 - self.v1
        return 0.5 * (u.conjugate() * w).imag

    def is_ccw(self) -> bool:
        return self.signed_area() > 0.0

    def is_degenerate(self, tol: float | None = None) -> bool:
        scale = max(self.side_lengths()) or 1.0
        return abs(self.signed_area()) <= resolve_tolerance(tol) * scale * scale

    def side_spread(self) -> float:
        """Max minus min side length; zero exactly for equilateral triangles."""
        sides = self.side_lengths()
        return max(sides) - min(sides)

    def is_equilateral(self, tol: float = 1e-9) -> bool:
        return self.side_spread() <= tol * max(self.side_lengths())

    def sidelines(self) -> tuple[HLine, HLine, HLine]:
        """Sideline opposite each vertex, in vertex order."""
        return (line_through(self.v2, self.v3),
                line_through(self.v3, self.v1),
                line_through(self.v1, self.v2))

    def oriented_ccw(self) -> "Triangle":
        if self.signed_area() < 0.0:
            return Triangle(self.v1, self.v3, self.v2)
        return self

    def canonical(self) -> "Triangle":
        """CCW orientation, starting at the vertex with smallest phase in [0, 2pi)."""
        t = self.oriented_ccw()
        vs = t.vertices
        k = min(range(3), key=lambda i: cmath.phase(vs[i]) % TWO_PI)
        return Triangle(vs[k], vs[(k + 1) % 3], vs[(k + 2) % 3])
