"""Sweep harness, fitting, and the claim verifiers with their controls."""

import cmath
import math

import numpy as np
import pytest

from poncelet.centers import CenterIndex, circumcenter, x110
from poncelet.experiments import (
    REFERENCE_CONFIG,
    brute_force_contains_equilateral,
    config_corpus,
    fit_circle,
    min_member_spread,
    singular_phases,
    stationarity,
    sweep,
    verify_feuerbach_stationary,
    verify_observation_polar_equilateral,
    verify_prop_double_inv,
    verify_prop_l35,
    verify_prop_l35_vertex,
    verify_x110_stationary,
    verify_x3233_circle,
    verify_x65_circle,
    _rotation_vertex_prediction,
)
from poncelet.family import (
    FamilyConfig,
    config_from_triangle_and_center,
    contains_equilateral,
    equilateral_vertices,
    triangle_at,
)
from poncelet.geom import GeometryError, principal_angle

CFG = REFERENCE_CONFIG
NEGATIVE = FamilyConfig(0.3 + 0j, 0.5 + 0j)


# ---------------------------------------------------------------------------
# Stationarity and circle fit
# ---------------------------------------------------------------------------

def test_stationarity_of_constant_points():
    report = stationarity([1 + 1j, 1 + 1j, 1 + 1j])
    assert report.max_deviation == 0.0
    assert report.mean == 1 + 1j


def test_stationarity_needs_two_points():
    with pytest.raises(GeometryError):
        stationarity([1 + 1j])


def test_fit_circle_recovers_exact_circle():
    ts = np.linspace(0.0, 2 * math.pi, 100, endpoint=False)
    fit = fit_circle(-0.75 + 0.25 * np.exp(1j * ts))
    assert abs(fit.center - (-0.75)) < 1e-12
    assert fit.radius == pytest.approx(0.25, abs=1e-12)
    assert fit.rms < 1e-12


def test_fit_circle_handles_noise(rng):
    ts = rng.uniform(0.0, 2 * math.pi, 400)
    pts = (0.2 + 0.1j) + 1.5 * np.exp(1j * ts)
    pts += rng.normal(0.0, 1e-4, 400) + 1j * rng.normal(0.0, 1e-4, 400)
    fit = fit_circle(pts)
    assert abs(fit.center - (0.2 + 0.1j)) < 1e-4
    assert fit.radius == pytest.approx(1.5, abs=1e-4)
    assert fit.rms < 3e-4


def test_fit_circle_rejects_collinear_points():
    with pytest.raises(GeometryError):
        fit_circle(np.linspace(-1, 1, 30) + 0j)


def test_fit_circle_rejects_identical_points():
    with pytest.raises(GeometryError):
        fit_circle(np.full(10, 0.3 + 0.4j))


# ---------------------------------------------------------------------------
# Brute-force search and singular phases
# ---------------------------------------------------------------------------

def test_brute_force_equilateral_agrees_with_criterion():
    assert brute_force_contains_equilateral(CFG)
    assert not brute_force_contains_equilateral(NEGATIVE)
    assert brute_force_contains_equilateral(FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j))


def test_min_member_spread_locates_equilateral_phase():
    phase, spread = min_member_spread(CFG)
    assert spread < 1e-10
    assert min(phase % (2 * math.pi), 2 * math.pi - phase % (2 * math.pi)) < 1e-6


def test_singular_phases_of_reference_config():
    found = singular_phases(CFG)
    phases = sorted(p % (2 * math.pi) if p % (2 * math.pi) < 2 * math.pi - 1e-6 else 0.0
                    for p, _ in found)
    assert len(found) == 2
    assert phases == pytest.approx([0.0, math.pi], abs=1e-6)
    assert {k for _, k in found} == {"equilateral", "isoceles"}


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def test_sweep_excludes_windows_and_tracks_x110():
    result = sweep(CFG, 360, {CenterIndex.X110, CenterIndex.X3})
    assert len(result.samples) == 360
    excluded = [s for s in result.samples if "excluded_window" in s.flags]
    assert excluded, "expected exclusion windows near the singular members"
    for s in excluded:
        assert CenterIndex.X110 not in s.centers
        assert CenterIndex.X3 in s.centers          # X3 is nowhere singular
    pts = result.points(CenterIndex.X110)
    assert pts.size >= 350
    assert np.max(np.abs(pts - (-1.0))) < 1e-8
    x3 = result.points(CenterIndex.X3)
    assert np.max(np.abs(x3)) < 1e-12


def test_sweep_is_deterministic():
    a = sweep(CFG, 64, {CenterIndex.X110})
    b = sweep(CFG, 64, {CenterIndex.X110})
    for sa, sb in zip(a.samples, b.samples):
        assert sa.phase == sb.phase
        assert sa.centers == sb.centers
        assert sa.flags == sb.flags


def test_sweep_minimum_count():
    with pytest.raises(GeometryError):
        sweep(CFG, 8, {CenterIndex.X2})


def test_sweep_of_all_equilateral_family_excludes_singular_centers():
    result = sweep(FamilyConfig(0j, 0j), 16, {CenterIndex.X110, CenterIndex.X2})
    for s in result.samples:
        assert "excluded_window" in s.flags
        assert CenterIndex.X110 not in s.centers
        assert abs(s.centers[CenterIndex.X2]) < 1e-12
    with pytest.raises(GeometryError):
        singular_phases(FamilyConfig(0j, 0j))


def test_zero_foci_verifiers_are_inconclusive_where_undefined():
    from poncelet.experiments import verify_feuerbach_stationary, verify_x3233_circle
    cfg = FamilyConfig(0j, 0j)
    assert verify_feuerbach_stationary(cfg).inconclusive
    assert verify_x3233_circle(cfg).inconclusive


def test_positive_negative_separation(rng):
    # the stationarity gap between satisfying and rejecting families is wide
    from poncelet.experiments import random_reject_config, random_satisfying_config
    for _ in range(8):
        cfg = random_satisfying_config(rng)
        pts = sweep(cfg, 360, {CenterIndex.X110}).points(CenterIndex.X110)
        assert stationarity(pts).max_deviation < 1e-7
    for _ in range(50):
        cfg = random_reject_config(rng)
        pts = sweep(cfg, 72, {CenterIndex.X110}).points(CenterIndex.X110)
        assert stationarity(pts).max_deviation > 1e-3


# ---------------------------------------------------------------------------
# Verifiers: positive cases and controls
# ---------------------------------------------------------------------------

def test_verify_x110_stationary_positive_and_negative():
    good = verify_x110_stationary(CFG)
    assert good.passed and good.metrics["max_deviation"] < 1e-7
    conj_pair = verify_x110_stationary(FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j))
    assert conj_pair.passed
    bad = verify_x110_stationary(NEGATIVE)
    assert not bad.passed
    assert bad.metrics["stationarity_max_deviation"] > 1e-3


def test_verify_x3233_circle_reference_values():
    report = verify_x3233_circle(CFG)
    assert report.passed
    assert report.metrics["center_error"] < 1e-6
    assert report.metrics["radius_error"] < 1e-6
    assert report.metrics["rms"] < 1e-7
    assert report.metrics["diameter_length"] == pytest.approx(0.5, abs=1e-12)


def test_verify_x3233_circle_rotation_equivariance():
    # rotating both foci rotates the fitted locus circle with them
    rot = cmath.exp(0.7j)
    base = FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j)
    turned = FamilyConfig(rot * base.f, rot * base.g)
    assert verify_x3233_circle(base).passed
    assert verify_x3233_circle(turned).passed


def test_verify_double_inv_worked_example():
    report = verify_prop_double_inv(1.0 + 0j, cmath.exp(1j * math.pi / 3))
    assert report.passed
    assert report.samples >= 10
    assert report.metrics["max_deviation"] < 1e-7


def test_double_inv_off_line_controls_deviate():
    # centers nudged off the mirrored bisector stop pinning X110 at K
    from poncelet.family import config_from_center_and_equilateral_vertex
    a_eq = cmath.exp(1j * math.pi / 3)
    for t in np.linspace(0.05, 0.4, 10):
        omega = complex(t, 0.05)
        cfg = config_from_center_and_equilateral_vertex(omega, a_eq)
        result = sweep(cfg, 36, {CenterIndex.X110})
        pts = result.points(CenterIndex.X110)
        assert np.min(np.abs(pts - 1.0)) > 1e-3


def test_verify_double_inv_rejects_degenerate_bisector():
    with pytest.raises(GeometryError):
        verify_prop_double_inv(1.0 + 0j, 1.0 + 0j)


def test_verify_l35_reference_triangle():
    t_ref = triangle_at(CFG, 1j)
    report = verify_prop_l35(t_ref)
    assert report.passed
    assert report.metrics["max_deviation"] < 1e-7
    assert report.metrics["x110_pairwise_spread"] < 1e-6
    assert report.metrics["x110_vs_reference"] < 1e-6
    assert report.metrics["controls_checked"] >= 1


def test_l35_known_center_is_equidistant_from_x3_x5():
    t_ref = triangle_at(CFG, 1j)
    x3 = circumcenter(t_ref)
    x5 = (x3 + (t_ref.v1 + t_ref.v2 + t_ref.v3 - 2 * x3)) / 2
    omega = 1.0 / 12.0
    assert abs(abs(omega - x3) - abs(omega - x5)) < 1e-12


def test_l35_centroid_control_fails_criterion():
    t_ref = triangle_at(CFG, 1j)
    centroid = (t_ref.v1 + t_ref.v2 + t_ref.v3) / 3
    cfg = config_from_triangle_and_center(t_ref, centroid)
    assert not contains_equilateral(cfg)


def test_verify_l35_vertex_worked_example():
    t_ref = triangle_at(CFG, 1j)
    report = verify_prop_l35_vertex(t_ref, 1.0 / 12.0 + 0j)
    assert report.passed
    assert report.metrics["vertex_distance"] < 1e-6
    # the hand-computed target: rotation by pi/3 + pi lands on e^{4 pi i/3}
    predicted = _rotation_vertex_prediction(t_ref, 1.0 / 12.0 + 0j, math.pi)
    assert abs(predicted - cmath.exp(4j * math.pi / 3)) < 1e-8


def test_l35_vertex_rotation_without_half_turn_fails():
    # negative control on the +pi term of the rotation
    t_ref = triangle_at(CFG, 1j)
    omega = 1.0 / 12.0 + 0j
    cfg = config_from_triangle_and_center(t_ref, omega)
    targets = equilateral_vertices(cfg).vertices
    x3 = circumcenter(t_ref)
    alpha = principal_angle(cmath.phase((omega - x3) / (x110(t_ref) - x3)))
    for a in (alpha, -alpha):
        bare = _rotation_vertex_prediction(t_ref, omega, a - math.pi)  # removes +pi
        assert min(abs(bare - v) for v in targets) > 1e-2


def test_verify_feuerbach_reference():
    report = verify_feuerbach_stationary(CFG)
    assert report.passed
    assert report.metrics["max_deviation"] < 1e-7
    assert report.metrics["mean_vs_prediction"] < 1e-7


def test_verify_x65_circle_reference_and_negative():
    report = verify_x65_circle(CFG)
    assert report.passed
    assert report.metrics["center_error"] < 1e-7
    assert report.metrics["radius_error"] < 1e-7
    assert report.metrics["origin_distance"] < 1e-7
    negative = verify_x65_circle(NEGATIVE)
    assert negative.passed      # still a circle, but missing the origin
    assert negative.metrics["origin_distance"] > 1e-3


def test_verify_x65_zero_foci_degenerate_circle():
    report = verify_x65_circle(FamilyConfig(0j, 0j))
    assert report.passed
    assert "fit skipped" in " ".join(report.notes)


def test_verify_polar_equilateral_small_corpus():
    corpus = [CFG, NEGATIVE, FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j)]
    report = verify_observation_polar_equilateral(corpus)
    assert report.passed
    assert report.metrics["mismatches"] == 0.0
    assert report.metrics["positives"] == 2.0


def test_corpus_generator_margins():
    corpus = config_corpus(20, 20, seed=11)
    assert len(corpus) == 40
    for cfg in corpus[:20]:
        assert contains_equilateral(cfg)
    for cfg in corpus[20:]:
        assert abs(abs(cfg.focus_sum) - abs(cfg.focus_product)) > 1e-3


def test_reports_serialize():
    report = verify_x110_stationary(CFG, count=64)
    payload = report.to_dict()
    assert payload["id"] == "x110-stationary"
    assert payload["pass"] is True
    assert isinstance(payload["metrics"]["max_deviation"], float)
