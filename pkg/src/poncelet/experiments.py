"""Sweep harness, stationarity metrics, circle fitting, and one verifier per
claim about the circle-inscribed families.

Every verifier returns a :class:`PropositionReport` whose ``passed`` flag is
true iff all of its metrics are within their declared tolerances; verifiers
are deterministic given their inputs and never raise on a mere claim
failure (only on unusable input).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ._search import refine_all_minima, refine_minimum
from .centers import (
    SINGULAR_AT_EQUILATERAL,
    SINGULAR_AT_ISOCELES,
    CenterIndex,
    center_point,
    circumcenter,
    is_obtuse,
    nine_point_center,
    x11_feuerbach,
    x110,
    tangential_triangle,
    x65,
)
from .dual import dual_contains_equilateral
from .family import (
    FamilyConfig,
    config_from_center_and_equilateral_vertex,
    config_from_triangle_and_center,
    contains_equilateral,
    equilateral_lambda,
    equilateral_vertices,
    stationary_x110_prediction,
    triangle_at,
    vertices_at,
)
from .geom import (
    TWO_PI,
    UNIT_CIRCLE,
    GeometryError,
    Triangle,
    perpendicular_bisector,
    principal_angle,
    ray_circle_intersection,
    reflect_point_in_line,
    rotate_about,
    line_point_direction,
    external_bisector,
)

# The worked reference configuration used by defaults, demos, and the CLI.
REFERENCE_CONFIG = FamilyConfig(0.5 + 0j, -1.0 / 3.0 + 0j)

# Claim-level tolerances: one to two orders looser than the geometry kernel.
STATIONARITY_TOL = 1e-7
CIRCLE_FIT_RMS_TOL = 1e-7
CIRCLE_PARAM_TOL = 1e-6
EQUILATERAL_SPREAD_TOL = 1e-6
VERTEX_MATCH_TOL = 1e-6
EXCLUSION_WINDOW = 1e-3


# ---------------------------------------------------------------------------
# Result containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StationarityReport:
    center: CenterIndex | None
    mean: complex
    max_deviation: float
    count: int


@dataclass(frozen=True)
class CircleFitResult:
    center: complex
    radius: float
    rms: float


@dataclass(frozen=True)
class SweepSample:
    phase: float
    lam: complex
    triangle: Triangle
    centers: dict[CenterIndex, complex]
    flags: frozenset[str]


@dataclass(frozen=True)
class SweepResult:
    cfg: FamilyConfig
    samples: tuple[SweepSample, ...]
    singular: tuple[tuple[float, str], ...]
    window: float

    def included(self, idx: CenterIndex) -> list[SweepSample]:
        return [s for s in self.samples
                if idx in s.centers and "degenerate" not in s.flags]

    def points(self, idx: CenterIndex) -> np.ndarray:
        return np.array([s.centers[idx] for s in self.included(idx)], dtype=complex)


@dataclass
class PropositionReport:
    id: str
    passed: bool
    inconclusive: bool = False
    metrics: dict[str, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    samples: int = 0

    @property
    def status(self) -> str:
        if self.inconclusive:
            return "inconclusive"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "pass": bool(self.passed),
            "inconclusive": bool(self.inconclusive),
            "metrics": {k: float(v) for k, v in self.metrics.items()},
            "tolerances": {k: float(v) for k, v in self.tolerances.items()},
            "samples": self.samples,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# Stationarity and circle fitting
# ---------------------------------------------------------------------------

def stationarity(points, center: CenterIndex | None = None) -> StationarityReport:
    """Max distance of the points to their coordinate-wise mean."""
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size < 2:
        raise GeometryError("stationarity needs at least 2 points")
    mean = complex(pts.mean())
    return StationarityReport(center, mean, float(np.max(np.abs(pts - mean))), pts.size)


def fit_circle(points) -> CircleFitResult:
    """Circle through noisy points: scaled-algebraic-distance fit via a
    generalized eigenproblem, then one Gauss-Newton geometric refinement."""
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size < 3:
        raise GeometryError("circle fit needs at least 3 points")
    x, y = pts.real, pts.imag
    if np.max(np.abs(pts - pts[0])) < 1e-12:
        raise GeometryError("circle fit degenerate: all points coincide")
    z = x * x + y * y
    design = np.column_stack([z, x, y, np.ones_like(x)])
    moments = design.T @ design / pts.size
    norm = np.zeros((4, 4))
    norm[0, 0] = 4.0 * z.mean()
    norm[0, 1] = norm[1, 0] = 2.0 * x.mean()
    norm[0, 2] = norm[2, 0] = 2.0 * y.mean()
    norm[1, 1] = norm[2, 2] = 1.0
    evals, evecs = scipy.linalg.eig(moments, norm)
    best, best_val = None, math.inf
    for k in range(4):
        lam = evals[k]
        if not np.isfinite(lam) or abs(lam.imag) > 1e-8 * (1.0 + abs(lam.real)):
            continue
        if lam.real < -1e-12:
            continue
        if lam.real < best_val:
            best, best_val = np.real(evecs[:, k]), lam.real
    if best is None:
        raise GeometryError("circle fit failed: no valid eigenpair")
    a, b, c, d = best
    scale = math.hypot(b, c) + math.sqrt(abs(d))
    if abs(a) < 1e-12 * max(scale, 1.0):
        raise GeometryError("circle fit degenerate: points are collinear")
    cx, cy = -b / (2.0 * a), -c / (2.0 * a)
    r_sq = (b * b + c * c - 4.0 * a * d) / (4.0 * a * a)
    if r_sq <= 0.0:
        raise GeometryError("circle fit degenerate: imaginary radius")
    center, radius = complex(cx, cy), math.sqrt(r_sq)

    # One Gauss-Newton step on the geometric distances.
    dist = np.abs(pts - center)
    if np.min(dist) < 1e-15:
        raise GeometryError("circle fit degenerate: data point at fitted center")
    res = dist - radius
    jac = np.column_stack([-(x - center.real) / dist, -(y - center.imag) / dist,
                           -np.ones_like(dist)])
    step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
    center += complex(step[0], step[1])
    radius += step[2]
    if radius <= 0.0:
        raise GeometryError("circle fit degenerate: nonpositive radius")
    rms = float(np.sqrt(np.mean((np.abs(pts - center) - radius) ** 2)))
    return CircleFitResult(center, radius, rms)


# ---------------------------------------------------------------------------
# Family spread search (brute-force equilateral detection)
# ---------------------------------------------------------------------------

def member_spreads(cfg: FamilyConfig, phases) -> np.ndarray:
    """Side-length spread of each family member at the given phases."""
    verts = vertices_at(cfg, np.exp(1j * np.asarray(phases, dtype=float)))
    sides = np.stack([
        np.abs(verts[..., 1] - verts[..., 2]),
        np.abs(verts[..., 2] - verts[..., 0]),
        np.abs(verts[..., 0] - verts[..., 1]),
    ], axis=-1)
    return sides.max(axis=-1) - sides.min(axis=-1)


def min_member_spread(cfg: FamilyConfig, samples: int = 720) -> tuple[float, float]:
    """(phase, spread) of the most equilateral member found by coarse scan
    plus golden-section refinement; the brute-force side of the criterion."""
    phases = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    coarse = member_spreads(cfg, phases)

    def spread_of(phi: float) -> float:
        return float(member_spreads(cfg, [phi])[0])

    return refine_minimum(spread_of, phases, coarse)


def brute_force_contains_equilateral(cfg: FamilyConfig,
                                     tol: float = EQUILATERAL_SPREAD_TOL,
                                     samples: int = 720) -> bool:
    """Equilateral search by sweep only; the independent oracle against the
    focal criterion |f+g| = |fg|."""
    return min_member_spread(cfg, samples)[1] < tol


# ---------------------------------------------------------------------------
# Singular-phase detection and sweeps
# ---------------------------------------------------------------------------

def family_is_all_equilateral(cfg: FamilyConfig) -> bool:
    return abs(cfg.f) < 1e-12 and abs(cfg.g) < 1e-12


def singular_phases(cfg: FamilyConfig, grid: int = 2048) -> tuple[tuple[float, str], ...]:
    """Phases of isoceles or equilateral members, found on the label-free
    curve min |side_i^2 - side_j^2| and refined by golden section.

    Undefined for the zero-foci family, where every member is equilateral.
    """
    if family_is_all_equilateral(cfg):
        raise GeometryError("every member is equilateral: no isolated singular phases")
    phases = np.linspace(0.0, TWO_PI, grid, endpoint=False)
    verts = vertices_at(cfg, np.exp(1j * phases))

    def diff_curve(v: np.ndarray) -> np.ndarray:
        s1 = np.abs(v[..., 1] - v[..., 2]) ** 2
        s2 = np.abs(v[..., 2] - v[..., 0]) ** 2
        s3 = np.abs(v[..., 0] - v[..., 1]) ** 2
        return np.minimum(np.minimum(np.abs(s1 - s2), np.abs(s2 - s3)),
                          np.abs(s3 - s1))

    coarse = diff_curve(verts)

    def curve_of(phi: float) -> float:
        return float(diff_curve(vertices_at(cfg, np.exp(1j * np.array([phi]))))[0])

    zeros = refine_all_minima(curve_of, phases, coarse,
                              coarse_cutoff=5e-2, zero_cutoff=1e-9)
    out: list[tuple[float, str]] = []
    for phase, _ in zeros:
        spread = float(member_spreads(cfg, [phase])[0])
        out.append((phase, "equilateral" if spread < 1e-6 else "isoceles"))
    if contains_equilateral(cfg) and abs(cfg.focus_product) > 1e-12:
        phase = cmath.phase(equilateral_lambda(cfg)) % TWO_PI
        if all(min(abs(phase - p), TWO_PI - abs(phase - p)) > 1e-6 for p, _ in out):
            out.append((phase, "equilateral"))
    return tuple(sorted(out))


def _phase_distance(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def sweep(cfg: FamilyConfig, count: int, centers: set[CenterIndex] | frozenset[CenterIndex],
          window: float = EXCLUSION_WINDOW) -> SweepResult:
    """Uniform lambda-phase sweep with per-sample centers and flags.

    Samples inside ``window`` (in phase) of an isoceles or equilateral member
    do not receive values for the centers that are singular there; they carry
    an ``excluded_window`` flag instead.  Deterministic for fixed inputs.
    """
    if count < 16:
        raise GeometryError("sweep needs at least 16 samples")
    centers = frozenset(centers)
    all_equilateral = family_is_all_equilateral(cfg)
    singular = () if all_equilateral else singular_phases(cfg)
    samples: list[SweepSample] = []
    prev: Triangle | None = None
    for k in range(count):
        phase = TWO_PI * k / count
        lam = cmath.exp(1j * phase)
        tri = triangle_at(cfg, lam, prev)
        prev = tri
        flags: set[str] = set()
        excluded: set[CenterIndex] = set()
        if all_equilateral:
            flags.add("excluded_window")
            excluded |= SINGULAR_AT_EQUILATERAL
        for sp, kind in singular:
            if _phase_distance(phase, sp) < window:
                flags.add("excluded_window")
                excluded |= (SINGULAR_AT_EQUILATERAL if kind == "equilateral"
                             else SINGULAR_AT_ISOCELES)
        if tri.is_degenerate():
            flags.add("degenerate")
        elif is_obtuse(tri):
            flags.add("obtuse")
        values: dict[CenterIndex, complex] = {}
        for idx in centers:
            if idx in excluded or "degenerate" in flags:
                continue
            try:
                values[idx] = center_point(tri, idx)
            except GeometryError:
                flags.add("center_error")
        samples.append(SweepSample(phase, lam, tri, values, frozenset(flags)))
    return SweepResult(cfg, tuple(samples), singular, window)


# ---------------------------------------------------------------------------
# Claim verifiers
# ---------------------------------------------------------------------------

def verify_x110_stationary(cfg: FamilyConfig, count: int = 360,
                           tol: float = STATIONARITY_TOL) -> PropositionReport:
    """The Kiepert-parabola focus of every member sits at f g/(f+g)."""
    report = PropositionReport("x110-stationary", False,
                               tolerances={"max_deviation": tol})
    criterion = contains_equilateral(cfg)
    result = sweep(cfg, count, {CenterIndex.X110})
    pts = result.points(CenterIndex.X110)
    report.samples = pts.size
    if pts.size < 2:
        report.inconclusive = True
        report.notes.append("not enough non-excluded samples")
        return report
    stat = stationarity(pts, CenterIndex.X110)
    report.metrics["stationarity_max_deviation"] = stat.max_deviation
    if abs(cfg.focus_sum) > 1e-12:
        prediction = cfg.focus_product / cfg.focus_sum
        deviation = float(np.max(np.abs(pts - prediction)))
        report.metrics["max_deviation"] = deviation
        report.metrics["prediction_modulus_error"] = abs(abs(prediction) - 1.0)
    else:
        deviation = math.inf
        report.notes.append("prediction undefined: f + g = 0")
    if not criterion:
        report.notes.append("family has no equilateral member; stationarity not expected")
    report.passed = criterion and deviation < tol
    return report


def verify_x3233_circle(cfg: FamilyConfig, count: int = 360,
                        param_tol: float = CIRCLE_PARAM_TOL,
                        rms_tol: float = CIRCLE_FIT_RMS_TOL) -> PropositionReport:
    """The Kiepert-parabola vertex sweeps the circle on diameter X110-X1511."""
    report = PropositionReport(
        "x3233-circle", False,
        tolerances={"center_error": param_tol, "radius_error": param_tol,
                    "rms": rms_tol})
    if not contains_equilateral(cfg):
        report.notes.append("family has no equilateral member; locus is not the claimed circle")
        return report
    if abs(cfg.focus_sum) < 1e-12:
        report.inconclusive = True
        report.notes.append("stationary focus undefined: f + g = 0")
        return report
    x110_point = stationary_x110_prediction(cfg)
    x1511_point = 0.5 * x110_point                    # X3 = 0 for unit-circle members
    expected_center = 0.5 * (x110_point + x1511_point)
    expected_radius = 0.5 * abs(x110_point - x1511_point)
    result = sweep(cfg, count, {CenterIndex.X3233})
    pts = result.points(CenterIndex.X3233)
    report.samples = pts.size
    if pts.size < 3:
        report.inconclusive = True
        return report
    fit = fit_circle(pts)
    report.metrics["center_error"] = abs(fit.center - expected_center)
    report.metrics["radius_error"] = abs(fit.radius - expected_radius)
    report.metrics["rms"] = fit.rms
    report.metrics["diameter_length"] = 2.0 * expected_radius
    report.passed = (report.metrics["center_error"] < param_tol
                     and report.metrics["radius_error"] < param_tol
                     and fit.rms < rms_tol)
    return report


def _line_samples(line, count: int, half_width: float = 0.45) -> list[complex]:
    """Uniform arc-length samples on a line, centered on the projection of
    the origin onto it."""
    anchor = line.project(0j)
    direction = line.direction()
    return [anchor + t * direction
            for t in np.linspace(-half_width, half_width, count)]


def verify_prop_double_inv(k_point: complex, a_eq: complex, count: int = 16,
                           sweep_count: int = 120,
                           tol: float = STATIONARITY_TOL) -> PropositionReport:
    """For caustic centers on the mirrored external bisector, the swept focus
    X110 sits at the chosen circumcircle point K."""
    if abs(abs(k_point) - 1.0) > 1e-9 or abs(abs(a_eq) - 1.0) > 1e-9:
        raise GeometryError("K and the equilateral vertex must lie on the unit circle")
    if abs(k_point - a_eq) < 1e-9 or abs(k_point + a_eq) < 1e-9:
        raise GeometryError("bisector degenerate: K coincides with +-A_eq")
    report = PropositionReport("double-inv-1", False,
                               tolerances={"max_deviation": tol})
    bisector = external_bisector(0j, k_point, a_eq)
    mirror = line_point_direction(0j, a_eq)
    reflected_dir = reflect_point_in_line(bisector.direction(), mirror)
    b_prime = line_point_direction(0j, reflected_dir)

    admissible = 0
    worst = 0.0
    for omega in _line_samples(b_prime, count):
        if abs(omega) < 0.02:
            report.notes.append("skipped center at origin (fully equilateral family)")
            continue
        try:
            cfg = config_from_center_and_equilateral_vertex(omega, a_eq)
        except GeometryError:
            continue
        if not contains_equilateral(cfg):
            report.notes.append(f"constructed family at {omega:.3f} missed the criterion")
            report.passed = False
            return report
        result = sweep(cfg, sweep_count, {CenterIndex.X110})
        pts = result.points(CenterIndex.X110)
        if pts.size < 2:
            continue
        admissible += 1
        worst = max(worst, float(np.max(np.abs(pts - k_point))))
    report.samples = admissible
    report.metrics["admissible_fraction"] = admissible / count
    report.metrics["max_deviation"] = worst
    if admissible < 2:
        report.inconclusive = True
        report.notes.append("fewer than 2 admissible caustic centers")
        return report
    report.passed = worst < tol and admissible >= count / 2
    return report


def _rotation_vertex_prediction(t_ref: Triangle, omega: complex, alpha: float) -> complex:
    x3 = circumcenter(t_ref)
    omega_rot = rotate_about(omega, x3, alpha / 3.0 + math.pi)
    return ray_circle_intersection(x3, omega_rot, UNIT_CIRCLE)


def verify_prop_l35_vertex(t_ref: Triangle, omega: complex,
                           tol: float = VERTEX_MATCH_TOL) -> PropositionReport:
    """Rotating the caustic center about X3 by alpha/3 + pi points at a vertex
    of the family's equilateral member.

    alpha is first taken as the signed angle from ray X3->X110 to ray
    X3->Omega; if no vertex matches, the opposite sign is tried and the
    branch recorded.
    """
    report = PropositionReport("l35-vertex", False,
                               tolerances={"vertex_distance": tol})
    cfg = config_from_triangle_and_center(t_ref, omega)
    if not contains_equilateral(cfg, tol=1e-8):
        report.notes.append("center does not produce an equilateral-containing family")
        return report
    x3 = circumcenter(t_ref)
    focus = x110(t_ref)
    if abs(omega - x3) < 1e-9:
        raise GeometryError("rotation undefined: center coincides with X3")
    alpha = principal_angle(cmath.phase((omega - x3) / (focus - x3)))
    targets = equilateral_vertices(cfg).vertices
    best = math.inf
    branch = ""
    for name, a in (("literal", alpha), ("flipped", -alpha)):
        predicted = _rotation_vertex_prediction(t_ref, omega, a)
        dist = min(abs(predicted - v) for v in targets)
        if dist < best:
            best, branch = dist, name
        if dist < tol:
            break
    report.samples = 1
    report.metrics["vertex_distance"] = best
    report.metrics["branch_flipped"] = 1.0 if branch == "flipped" else 0.0
    report.notes.append(f"matched angle branch: {branch}")
    report.passed = best < tol
    return report


def verify_prop_l35(t_ref: Triangle, count: int = 8, sweep_count: int = 120,
                    dev_tol: float = STATIONARITY_TOL,
                    spread_tol: float = VERTEX_MATCH_TOL,
                    offset: float = 0.05) -> PropositionReport:
    """Families over inconics of a fixed triangle contain an equilateral iff
    the inconic center lies on the perpendicular bisector of X3 X5; the
    resulting stationary X110 does not depend on the chosen center."""
    report = PropositionReport(
        "l35", False,
        tolerances={"max_deviation": dev_tol, "x110_pairwise_spread": spread_tol})
    x3 = circumcenter(t_ref)
    x5 = nine_point_center(t_ref)
    if abs(x3 - x5) < 1e-9:
        raise GeometryError("perpendicular bisector undefined: X3 = X5")
    l35 = perpendicular_bisector(x3, x5)
    normal = l35.unit_normal()

    means: list[complex] = []
    worst_dev = 0.0
    branches = {"literal": 0, "flipped": 0}
    controls_checked = 0
    for omega in _line_samples(l35, count):
        try:
            cfg = config_from_triangle_and_center(t_ref, omega)
        except GeometryError:
            continue
        if not contains_equilateral(cfg, tol=1e-8):
            report.notes.append(f"on-line center {omega:.4f} failed the criterion")
            report.passed = False
            return report
        result = sweep(cfg, sweep_count, {CenterIndex.X110})
        pts = result.points(CenterIndex.X110)
        if pts.size < 2:
            continue
        stat = stationarity(pts, CenterIndex.X110)
        means.append(stat.mean)
        worst_dev = max(worst_dev, stat.max_deviation)
        vertex_report = verify_prop_l35_vertex(t_ref, omega)
        if not vertex_report.passed:
            report.notes.append(f"vertex construction failed at {omega:.4f}")
            report.passed = False
            return report
        branches["flipped" if vertex_report.metrics["branch_flipped"] else "literal"] += 1

        # Off-line control: the same center nudged along the normal must fail.
        for sign in (1.0, -1.0):
            shifted = omega + sign * offset * normal
            try:
                ctrl = config_from_triangle_and_center(t_ref, shifted)
            except GeometryError:
                continue
            controls_checked += 1
            if contains_equilateral(ctrl, tol=1e-8):
                report.notes.append(f"off-line center {shifted:.4f} unexpectedly passed")
                report.passed = False
                return report
            break

    report.samples = len(means)
    if len(means) < 2:
        report.inconclusive = True
        report.notes.append("fewer than 2 admissible centers on the bisector")
        return report
    spread = max(abs(p - q) for p in means for q in means)
    overall_mean = sum(means) / len(means)
    report.metrics["max_deviation"] = worst_dev
    report.metrics["x110_pairwise_spread"] = spread
    report.metrics["x110_vs_reference"] = abs(overall_mean - x110(t_ref))
    report.metrics["branch_literal"] = float(branches["literal"])
    report.metrics["branch_flipped"] = float(branches["flipped"])
    report.metrics["controls_checked"] = float(controls_checked)
    report.passed = (worst_dev < dev_tol and spread < spread_tol
                     and controls_checked >= 1)
    return report


def verify_feuerbach_stationary(cfg: FamilyConfig, count: int = 360,
                                tol: float = STATIONARITY_TOL) -> PropositionReport:
    """The Feuerbach point of the tangential family is stationary at the
    reference family's fixed Kiepert focus."""
    report = PropositionReport("feuerbach", False,
                               tolerances={"max_deviation": tol, "mean_vs_prediction": tol})
    if not contains_equilateral(cfg):
        report.notes.append("family has no equilateral member")
        return report
    if abs(cfg.focus_sum) < 1e-12:
        report.inconclusive = True
        report.notes.append("stationary target undefined: f + g = 0")
        return report
    prediction = stationary_x110_prediction(cfg)
    result = sweep(cfg, count, set())
    pts = []
    skipped_obtuse = 0
    for s in result.samples:
        if s.flags & {"degenerate", "excluded_window"}:
            continue
        if "obtuse" in s.flags:
            skipped_obtuse += 1
            continue
        try:
            tangential = tangential_triangle(s.triangle, UNIT_CIRCLE)
            pts.append(x11_feuerbach(tangential))
        except GeometryError:
            continue
    report.samples = len(pts)
    report.metrics["skipped_obtuse"] = float(skipped_obtuse)
    if len(pts) < 8:
        report.inconclusive = True
        report.notes.append("fewer than 8 acute members")
        return report
    stat = stationarity(pts)
    report.metrics["max_deviation"] = stat.max_deviation
    report.metrics["mean_vs_prediction"] = abs(stat.mean - prediction)
    report.passed = (stat.max_deviation < tol
                     and report.metrics["mean_vs_prediction"] < tol)
    return report


def verify_x65_circle(cfg: FamilyConfig, count: int = 360,
                      tol: float = STATIONARITY_TOL,
                      rms_tol: float = CIRCLE_FIT_RMS_TOL) -> PropositionReport:
    """The X65 locus of the tangential family is the circle centered at f+g
    with radius |fg|; it passes through X3 = 0 exactly in the equilateral-
    containing case."""
    report = PropositionReport(
        "x65-circle", False,
        tolerances={"center_error": tol, "radius_error": tol, "rms": rms_tol})
    if abs(cfg.f) < 1e-12 and abs(cfg.g) < 1e-12:
        tri = triangle_at(cfg, 1.0 + 0j)
        value = x65(tangential_triangle(tri, UNIT_CIRCLE))
        report.metrics["stationary_value"] = abs(value)
        report.notes.append("degenerate circle: X65 constant at the origin; fit skipped")
        report.samples = 1
        report.passed = abs(value) < tol
        return report
    result = sweep(cfg, count, set())
    pts = []
    skipped_obtuse = 0
    for s in result.samples:
        if s.flags & {"degenerate"}:
            continue
        if "obtuse" in s.flags:
            skipped_obtuse += 1
            continue
        try:
            tangential = tangential_triangle(s.triangle, UNIT_CIRCLE)
            pts.append(x65(tangential))
        except GeometryError:
            continue
    report.samples = len(pts)
    report.metrics["skipped_obtuse"] = float(skipped_obtuse)
    if len(pts) < 8:
        report.inconclusive = True
        report.notes.append("fewer than 8 acute members")
        return report
    fit = fit_circle(pts)
    report.metrics["center_error"] = abs(fit.center - cfg.focus_sum)
    report.metrics["radius_error"] = abs(fit.radius - abs(cfg.focus_product))
    report.metrics["rms"] = fit.rms
    origin_gap = abs(abs(fit.center) - fit.radius)
    report.metrics["origin_distance"] = origin_gap
    report.passed = (report.metrics["center_error"] < tol
                     and report.metrics["radius_error"] < tol
                     and fit.rms < rms_tol)
    if contains_equilateral(cfg):
        report.tolerances["origin_distance"] = tol
        report.passed = report.passed and origin_gap < tol
    else:
        report.passed = report.passed and origin_gap > 1e-3
        report.notes.append("no equilateral member: circle must miss the origin")
    return report


def verify_observation_polar_equilateral(corpus) -> PropositionReport:
    """The family and its polar image agree on containing an equilateral."""
    report = PropositionReport("polar-equilateral", False,
                               tolerances={"mismatches": 0.5})
    corpus = list(corpus)
    if not corpus:
        raise GeometryError("empty corpus")
    mismatches = 0
    positives = 0
    for cfg in corpus:
        primal = contains_equilateral(cfg)
        image = dual_contains_equilateral(cfg)
        positives += primal
        mismatches += primal != image
    report.samples = len(corpus)
    report.metrics["mismatches"] = float(mismatches)
    report.metrics["positives"] = float(positives)
    report.passed = mismatches == 0
    return report


# ---------------------------------------------------------------------------
# Random configuration corpus
# ---------------------------------------------------------------------------

def random_satisfying_config(rng: np.random.Generator) -> FamilyConfig:
    """Random family that contains an equilateral member, built from a random
    caustic center and equilateral vertex."""
    while True:
        radius = rng.uniform(0.02, 0.35)
        center = radius * np.exp(1j * rng.uniform(0.0, TWO_PI))
        vertex = np.exp(1j * rng.uniform(0.0, TWO_PI))
        try:
            return config_from_center_and_equilateral_vertex(complex(center), complex(vertex))
        except GeometryError:
            continue


def random_reject_config(rng: np.random.Generator,
                         margin: float = 1e-3) -> FamilyConfig:
    """Random family whose criterion residual exceeds ``margin`` (so the
    brute-force search and the criterion cannot disagree by noise)."""
    while True:
        f = rng.uniform(0.0, 0.7) * np.exp(1j * rng.uniform(0.0, TWO_PI))
        g = rng.uniform(0.0, 0.7) * np.exp(1j * rng.uniform(0.0, TWO_PI))
        cfg = FamilyConfig(complex(f), complex(g))
        if abs(abs(cfg.focus_sum) - abs(cfg.focus_product)) > margin:
            return cfg


def config_corpus(n_satisfying: int, n_rejects: int, seed: int = 7) -> list[FamilyConfig]:
    rng = np.random.default_rng(seed)
    corpus = [random_satisfying_config(rng) for _ in range(n_satisfying)]
    corpus += [random_reject_config(rng) for _ in range(n_rejects)]
    return corpus


# ---------------------------------------------------------------------------
# Aggregate runner
# ---------------------------------------------------------------------------

def verify_all(seed: int = 7, count: int = 360,
               corpus_size: tuple[int, int] = (100, 100),
               tol: float | None = None) -> list[PropositionReport]:
    """Run every claim verifier with its default setup; the CLI's `verify all`."""
    kwargs = {} if tol is None else {"tol": tol}
    cfg = REFERENCE_CONFIG
    t_ref = triangle_at(cfg, 1j)
    omega_star = 0.5 * cfg.focus_sum
    reports = [
        verify_x110_stationary(cfg, count, **kwargs),
        verify_x3233_circle(cfg, count),
        verify_prop_double_inv(1.0 + 0j, cmath.exp(1j * math.pi / 3.0), **kwargs),
        verify_prop_l35(t_ref, **({} if tol is None else {"dev_tol": tol})),
        verify_prop_l35_vertex(t_ref, omega_star),
        verify_feuerbach_stationary(cfg, count, **kwargs),
        verify_x65_circle(cfg, count, **kwargs),
        verify_observation_polar_equilateral(
            config_corpus(corpus_size[0], corpus_size[1], seed)),
    ]
    return reports
