"""Circle-inscribed Poncelet triangle families from caustic foci.

A family is pinned down by the pair of caustic foci (f, g) inside the unit
disk.  The member at unit-modulus parameter ``lam`` has vertices at the three
roots of

    z^3 - e1 z^2 + e2 z - e3,
    e1 = f + g + lam * conj(f) conj(g),
    e2 = f g + lam * (conj(f) + conj(g)),
    e3 = lam.

All three roots land on the unit circle and the sides stay tangent to the
ellipse with foci f, g whose major axis has length |1 - conj(f) g|; the
closure is re-verified numerically by the tangency oracle in the tests
rather than assumed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .geom import (
    TWO_PI,
    _adjugate3,
    ConicQ,
    EllipseG,
    GeometryError,
    Triangle,
    conic_from_ellipse,
    conic_to_geometric,
    resolve_tolerance,
)

# Vertices claimed to be on the unit circle must satisfy this bound.
UNIT_MODULUS_TOL = 1e-9

_OMEGA = cmath.exp(2j * math.pi / 3.0)


@dataclass(frozen=True)
class FamilyConfig:
    """Caustic foci (f, g), both strictly inside the unit disk."""

    f: complex
    g: complex

    def __post_init__(self) -> None:
        for z in (self.f, self.g):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise GeometryError("focus must be finite")
            if abs(z) >= 1.0:
                raise GeometryError("focus outside unit disk")

    @property
    def focus_sum(self) -> complex:
        return self.f + self.g

    @property
    def focus_product(self) -> complex:
        return self.f * self.g

    def elementary_symmetrics(self, lam):
        """Vieta coefficients (e1, e2, e3) of the member cubic at lam."""
        e1 = self.focus_sum + lam * np.conj(self.focus_product)
        e2 = self.focus_product + lam * np.conj(self.focus_sum)
        return e1, e2, lam


def cubic_roots(e1, e2, e3):
    """Roots of z^3 - e1 z^2 + e2 z - e3, shape (..., 3).

    Closed-form (depressed cubic via a principal complex cube root, with the
    branch of sqrt chosen to avoid cancellation) followed by one guarded
    Newton step per root.  Accepts scalars or broadcastable arrays.
    """
    e1, e2, e3 = np.broadcast_arrays(
        np.asarray(e1, dtype=complex),
        np.asarray(e2, dtype=complex),
        np.asarray(e3, dtype=complex),
    )
    p = -e1
    q = e2
    r = -e3
    a = q - p * p / 3.0
    b = 2.0 * p ** 3 / 27.0 - p * q / 3.0 + r
    disc_sqrt = np.sqrt((b / 2.0) ** 2 + (a / 3.0) ** 3)
    u3a = -b / 2.0 + disc_sqrt
    u3b = -b / 2.0 - disc_sqrt
    u3 = np.where(np.abs(u3a) >= np.abs(u3b), u3a, u3b)
    safe_u3 = np.where(u3 == 0, 1.0, u3)
    u = np.where(u3 == 0, 0.0, np.exp(np.log(safe_u3) / 3.0))
    safe_u = np.where(u == 0, 1.0, u)
    v = np.where(u == 0, 0.0, -a / (3.0 * safe_u))
    shift = p / 3.0
    roots = np.stack([
        u + v - shift,
        _OMEGA * u + np.conj(_OMEGA) * v - shift,
        np.conj(_OMEGA) * u + _OMEGA * v - shift,
    ], axis=-1)

    e1e, e2e, e3e = (np.expand_dims(c, -1) for c in (e1, e2, e3))
    val = ((roots - e1e) * roots + e2e) * roots - e3e
    der = (3.0 * roots - 2.0 * e1e) * roots + e2e
    ok = np.abs(der) > 1e-3 * np.sqrt(np.abs(val)) + 1e-30
    roots = np.where(ok, roots - val / np.where(ok, der, 1.0), roots)
    return roots


def vertices_at(cfg: FamilyConfig, lams) -> np.ndarray:
    """Member vertices for an array of unit-modulus parameters, shape (..., 3).

    No ordering or continuity guarantees; use :func:`triangle_at` when a
    consistently oriented, trackable triangle is needed.
    """
    e1, e2, e3 = cfg.elementary_symmetrics(np.asarray(lams, dtype=complex))
    return cubic_roots(e1, e2, e3)


def match_vertices(prev: tuple[complex, complex, complex],
                   new: tuple[complex, complex, complex]) -> tuple[complex, complex, complex]:
    """Reorder ``new`` by exhaustive nearest-assignment against ``prev``."""
    best = min(
        permutations(new),
        key=lambda perm: sum(abs(perm[i] - prev[i]) for i in range(3)),
    )
    return best


def triangle_at(cfg: FamilyConfig, lam: complex,
                prev: Triangle | None = None) -> Triangle:
    """Family member at parameter lam (|lam| = 1).

    Without ``prev`` the vertices come back counterclockwise starting from
    the smallest phase; with ``prev`` they are matched to the previous
    member by nearest-vertex assignment so sweeps stay continuous.
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-12:
        raise GeometryError("family parameter must have unit modulus")
    roots = cubic_roots(*cfg.elementary_symmetrics(lam))
    verts = tuple(complex(z) for z in roots)
    if prev is not None:
        return Triangle(*match_vertices(prev.vertices, verts))
    return Triangle(*verts).canonical()


def caustic_of(cfg: FamilyConfig) -> EllipseG:
    """The inscribed ellipse every member's sides are tangent to.

    Foci f, g; major-axis length |1 - conj(f) g|.  Raises if the resulting
    ellipse fails to stay strictly inside the unit circle.
    """
    major = abs(1.0 - np.conj(cfg.f) * cfg.g)
    a = 0.5 * major
    c = 0.5 * abs(cfg.f - cfg.g)
    b_sq = a * a - c * c
    if b_sq <= 0.0:
        raise GeometryError("degenerate caustic: foci too far apart")
    center = 0.5 * cfg.focus_sum
    theta = cmath.phase(cfg.g - cfg.f) % math.pi if c > 0.0 else 0.0
    ellipse = EllipseG(complex(center), a, math.sqrt(b_sq), theta)
    if np.max(np.abs(ellipse.boundary_points(64))) >= 1.0:
        raise GeometryError("caustic not strictly inside the unit circle")
    return ellipse


def caustic_conic(cfg: FamilyConfig) -> ConicQ:
    return conic_from_ellipse(caustic_of(cfg))


def contains_equilateral(cfg: FamilyConfig, tol: float = 1e-9) -> bool:
    """True iff the family has an equilateral member: |f + g| = |f g|.

    Evaluated in multiplied-out form so zero foci need no special casing;
    f = g = 0 yields True (every member is equilateral).
    """
    return abs(abs(cfg.focus_sum) - abs(cfg.focus_product)) <= tol


def equilateral_lambda(cfg: FamilyConfig) -> complex:
    """The parameter -(f+g)/conj(f g) of the equilateral member."""
    if abs(cfg.focus_product) <= resolve_tolerance(None):
        raise GeometryError("equilateral parameter undefined for a zero focus")
    lam = -cfg.focus_sum / np.conj(cfg.focus_product)
    if abs(abs(lam) - 1.0) > 1e-10:
        raise GeometryError("family has no equilateral member: |f+g| != |fg|")
    return complex(lam)


def equilateral_vertices(cfg: FamilyConfig, lam_if_all: complex = 1.0 + 0j) -> Triangle:
    """The equilateral member, as the cube roots of its parameter.

    For f = g = 0 every member is equilateral and ``lam_if_all`` picks one.
    """
    if abs(cfg.f) <= resolve_tolerance(None) and abs(cfg.g) <= resolve_tolerance(None):
        lam = complex(lam_if_all)
    else:
        lam = equilateral_lambda(cfg)
    zeta = lam ** (1.0 / 3.0)
    return Triangle(zeta, zeta * _OMEGA, zeta * _OMEGA ** 2).canonical()


def stationary_x110_prediction(cfg: FamilyConfig) -> complex:
    """Predicted fixed position f g / (f + g) of the Kiepert-parabola focus."""
    if not contains_equilateral(cfg):
        raise GeometryError("prediction only valid when the family has an equilateral member")
    if abs(cfg.focus_sum) <= resolve_tolerance(None):
        raise GeometryError("prediction undefined: f + g = 0")
    return cfg.focus_product / cfg.focus_sum


# ---------------------------------------------------------------------------
# Inconics: from a triangle and a center back to a family
# ---------------------------------------------------------------------------

def _barycentric(p: complex, t: Triangle) -> tuple[float, float, float]:
    v1, v2, v3 = t.vertices
    denom = ((v2 - v1).conjugate() * (v3 - v1)).imag
    w1 = ((v2 - p).conjugate() * (v3 - p)).imag / denom
    w2 = ((v3 - p).conjugate() * (v1 - p)).imag / denom
    w3 = ((v1 - p).conjugate() * (v2 - p)).imag / denom
    return (w1, w2, w3)


def _medial_triangle(t: Triangle) -> Triangle:
    v1, v2, v3 = t.vertices
    return Triangle((v2 + v3) / 2.0, (v3 + v1) / 2.0, (v1 + v2) / 2.0)


def inconic_with_center(t: Triangle, center: complex,
                        tol: float | None = None) -> ConicQ:
    """Conic tangent to all three sidelines of ``t`` with the given center.

    Solved in the dual: the symmetric dual matrix D must annihilate each
    sideline (L D L^T = 0) and satisfy the center conditions
    D13 = x0 D33, D23 = y0 D33; the conic is adj(D).  The center must lie
    strictly inside the medial triangle or the inconic is not an ellipse.
    """
    tol = resolve_tolerance(tol)
    if t.is_degenerate(tol):
        raise GeometryError("inconic undefined for a degenerate triangle")
    bary = _barycentric(center, _medial_triangle(t))
    if min(bary) <= tol:
        raise GeometryError("inconic not an ellipse: center outside the medial triangle")

    rows = []
    for line in t.sidelines():
        l, m, n = line.normalized().as_array()
        # coefficients w.r.t. (D11, D12, D13, D22, D23, D33)
        rows.append([l * l, 2 * l * m, 2 * l * n, m * m, 2 * m * n, n * n])
    x0, y0 = center.real, center.imag
    rows.append([0, 0, 1, 0, 0, -x0])
    rows.append([0, 0, 0, 0, 1, -y0])
    _, sing, vh = np.linalg.svd(np.asarray(rows, dtype=float))
    if sing[-2] <= 1e-8 * sing[0]:
        raise GeometryError("inconic underdetermined (degenerate configuration)")
    d11, d12, d13, d22, d23, d33 = vh[-1]
    dual = np.array([[d11, d12, d13], [d12, d22, d23], [d13, d23, d33]])
    return ConicQ.from_matrix(_adjugate3(dual))


def _ordered_foci(f1: complex, f2: complex) -> tuple[complex, complex]:
    if (f1.real, f1.imag) <= (f2.real, f2.imag):
        return f1, f2
    return f2, f1


def config_from_triangle_and_center(t: Triangle, center: complex) -> FamilyConfig:
    """Family whose caustic is the inconic of ``t`` centered at ``center``.

    ``t`` must be inscribed in the unit circle; the returned foci are ordered
    lexicographically by (re, im), and the member at lam = v1 v2 v3
    reproduces ``t`` up to vertex order.
    """
    if max(abs(abs(v) - 1.0) for v in t.vertices) > UNIT_MODULUS_TOL:
        raise GeometryError("triangle must be inscribed in the unit circle")
    shape = conic_to_geometric(inconic_with_center(t, center))
    if not isinstance(shape, EllipseG):
        raise GeometryError(f"inconic is not an ellipse ({shape})")
    f, g = _ordered_foci(*shape.foci())
    return FamilyConfig(f, g)


def config_from_center_and_equilateral_vertex(center: complex,
                                              vertex: complex) -> FamilyConfig:
    """Family with caustic center ``center`` whose equilateral member has
    ``vertex`` (on the unit circle) among its vertices.

    Built from f + g = 2 O and f g = -2 conj(O) A^3, which forces the
    equilateral parameter to A^3; the criterion |f+g| = |fg| then holds by
    construction.
    """
    if abs(abs(vertex) - 1.0) > UNIT_MODULUS_TOL:
        raise GeometryError("equilateral vertex must lie on the unit circle")
    s = 2.0 * center
    p = -2.0 * np.conj(center) * vertex ** 3
    disc = cmath.sqrt(s * s - 4.0 * p)
    f = (s + disc) / 2.0
    g = (s - disc) / 2.0
    if abs(f) >= 1.0 or abs(g) >= 1.0:
        raise GeometryError("no valid caustic: focus outside unit disk")
    return FamilyConfig(*_ordered_foci(complex(f), complex(g)))
