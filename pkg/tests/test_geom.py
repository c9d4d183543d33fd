"""Kernel operations: reflections, bisectors, polarity, conic conversions."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from poncelet.geom import (
    UNIT_CIRCLE,
    CircleG,
    ConicQ,
    EllipseG,
    GeometryError,
    HLine,
    ParabolaG,
    Triangle,
    conic_from_circle,
    conic_from_ellipse,
    conic_from_parabola,
    conic_to_geometric,
    external_bisector,
    line_conic_tangency_residual,
    line_point_direction,
    line_through,
    polar_image_of_conic,
    polar_line,
    pole,
    principal_angle,
    ray_circle_intersection,
    reflect_point_in_line,
    rotate_about,
)

finite_floats = st.floats(min_value=-3.0, max_value=3.0,
                          allow_nan=False, allow_infinity=False)
points = st.builds(complex, finite_floats, finite_floats)


def same_line(l1: HLine, l2: HLine, tol=1e-9) -> bool:
    a = np.array(l1.normalized().as_array())
    b = np.array(l2.normalized().as_array())
    return min(np.linalg.norm(a - b), np.linalg.norm(a + b)) < tol


# ---------------------------------------------------------------------------
# Reflections and rotations
# ---------------------------------------------------------------------------

def test_reflect_across_imaginary_axis():
    axis = HLine(1.0, 0.0, 0.0)          # x = 0
    assert reflect_point_in_line(1 + 0j, axis) == pytest.approx(-1 + 0j)


def test_reflect_fixes_points_on_line():
    line = line_through(0.2 + 0.1j, 1 + 1j)
    p = 0.2 + 0.1j
    assert abs(reflect_point_in_line(p, line) - p) < 1e-14


def test_reflect_swaps_coordinates_across_diagonal():
    diag = line_through(0j, 1 + 1j)      # y = x
    assert reflect_point_in_line(0.3 + 0.4j, diag) == pytest.approx(0.4 + 0.3j)


@settings(deadline=None)
@given(p=points, q=points, r=points)
def test_reflection_is_an_involution(p, q, r):
    if abs(q - r) < 1e-3:
        return
    line = line_through(q, r)
    assert abs(reflect_point_in_line(reflect_point_in_line(p, line), line) - p) < 1e-12


def test_rotate_half_turn():
    assert rotate_about(1 + 0j, 0j, math.pi) == pytest.approx(-1 + 0j)


def test_rotate_fixes_center():
    p = 0.3 - 0.8j
    assert rotate_about(p, p, 2.31) == pytest.approx(p)


def test_rotate_matches_matrix_rotation_oracle():
    # same rotation done with an explicit 2x2 matrix
    theta = 4.0 * math.pi / 3.0
    p, c = 1.0 / 12.0 + 0j, 0j
    mat = np.array([[math.cos(theta), -math.sin(theta)],
                    [math.sin(theta), math.cos(theta)]])
    expected = complex(*(mat @ [p.real - c.real, p.imag - c.imag])) + c
    got = rotate_about(p, c, theta)
    assert abs(got - expected) < 1e-15
    assert abs(got - (1.0 / 12.0) * cmath.exp(1j * theta)) < 1e-15


# ---------------------------------------------------------------------------
# External bisector
# ---------------------------------------------------------------------------

def test_external_bisector_right_angle():
    line = external_bisector(0j, 1 + 0j, 1j)
    assert same_line(line, line_point_direction(0j, cmath.exp(3j * math.pi / 4.0)))


def test_external_bisector_sixty_degrees():
    line = external_bisector(0j, 1 + 0j, cmath.exp(1j * math.pi / 3.0))
    assert same_line(line, line_point_direction(0j, cmath.exp(2j * math.pi / 3.0)))


def test_external_bisector_straight_angle_contains_the_rays():
    # continuous limit of the external bisector as the angle opens to pi
    line = external_bisector(0j, 1 + 0j, -1 + 0j)
    assert same_line(line, HLine(0.0, 1.0, 0.0))     # y = 0


def test_external_bisector_same_ray_is_degenerate():
    with pytest.raises(GeometryError):
        external_bisector(0j, 1 + 0j, 2 + 0j)


def test_external_bisector_perpendicular_to_internal():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p, q = np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
        if abs(p - q) < 1e-2 or abs(p + q) < 1e-2:
            continue
        ext = external_bisector(0j, complex(p), complex(q))
        internal = (p / abs(p) + q / abs(q))
        dot = ext.direction().real * internal.real + ext.direction().imag * internal.imag
        assert abs(dot) < 1e-12


# ---------------------------------------------------------------------------
# Polarity
# ---------------------------------------------------------------------------

def test_polar_line_of_external_point_unit_circle():
    circle = conic_from_circle(UNIT_CIRCLE)
    assert same_line(polar_line(2 + 0j, circle), HLine(1.0, 0.0, -0.5))  # x = 1/2


def test_polar_line_on_circle_is_tangent():
    circle = conic_from_circle(UNIT_CIRCLE)
    p = cmath.exp(0.7j)
    tangent = polar_line(p, circle)
    assert tangent.contains(p, 1e-12)
    assert abs(line_conic_tangency_residual(tangent, circle)) < 1e-12


def test_pole_polar_round_trip_on_random_points():
    rng = np.random.default_rng(11)
    conics = [
        conic_from_circle(CircleG(0.3 - 0.2j, 1.7)),
        conic_from_ellipse(EllipseG(0.1 + 0.4j, 1.3, 0.6, 0.8)),
    ]
    for conic in conics:
        for _ in range(100):
            p = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            try:
                back = pole(polar_line(p, conic), conic)
            except GeometryError:
                continue     # p at the conic center: polar is the line at infinity
            assert abs(back - p) < 1e-10


def test_polar_image_of_concentric_circle():
    inner = conic_from_circle(CircleG(0j, 0.25))
    image = polar_image_of_conic(inner, UNIT_CIRCLE)
    shape = conic_to_geometric(image)
    assert isinstance(shape, EllipseG)
    assert shape.a == pytest.approx(4.0, abs=1e-12)
    assert shape.b == pytest.approx(4.0, abs=1e-12)
    assert abs(shape.center) < 1e-12


def test_polar_image_is_an_involution_up_to_scale():
    conic = conic_from_ellipse(EllipseG(0.2 + 0.1j, 0.7, 0.4, 0.5))
    twice = polar_image_of_conic(polar_image_of_conic(conic, UNIT_CIRCLE), UNIT_CIRCLE)
    assert conic.proportionality_residual(twice) < 1e-10


def test_polar_of_degenerate_conic_is_an_error():
    degenerate = ConicQ.from_matrix(np.diag([1.0, -1.0, 0.0]))  # pair of lines
    with pytest.raises(GeometryError):
        polar_line(1 + 1j, degenerate)
    with pytest.raises(GeometryError):
        polar_image_of_conic(degenerate, UNIT_CIRCLE)


# ---------------------------------------------------------------------------
# Conic <-> geometric round trips
# ---------------------------------------------------------------------------

def test_unit_circle_matrix_recovers_circle():
    shape = conic_to_geometric(conic_from_circle(UNIT_CIRCLE))
    assert isinstance(shape, EllipseG)
    assert shape.a == pytest.approx(1.0) and shape.b == pytest.approx(1.0)
    assert abs(shape.center) < 1e-14


def test_textbook_ellipse():
    conic = ConicQ.from_matrix(np.diag([0.25, 1.0, -1.0]))  # x^2/4 + y^2 = 1
    shape = conic_to_geometric(conic)
    assert isinstance(shape, EllipseG)
    assert shape.a == pytest.approx(2.0)
    assert shape.b == pytest.approx(1.0)
    f1, f2 = shape.foci()
    assert sorted([f1.real, f2.real]) == pytest.approx([-math.sqrt(3), math.sqrt(3)])


def test_ellipse_round_trip_identity():
    rng = np.random.default_rng(5)
    for _ in range(50):
        ellipse = EllipseG(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                           rng.uniform(0.5, 2.0) + 1.0, rng.uniform(0.2, 1.0),
                           rng.uniform(0.0, math.pi))
        back = conic_to_geometric(conic_from_ellipse(ellipse))
        assert isinstance(back, EllipseG)
        assert abs(back.center - ellipse.center) < 1e-10
        assert back.a == pytest.approx(ellipse.a, abs=1e-10)
        assert back.b == pytest.approx(ellipse.b, abs=1e-10)
        dtheta = (back.theta - ellipse.theta) % math.pi
        assert min(dtheta, math.pi - dtheta) < 1e-9


def test_parabola_round_trip_identity():
    parabola = ParabolaG(1j / 4.0, HLine(0.0, 1.0, 0.25))  # y = x^2
    back = conic_to_geometric(conic_from_parabola(parabola))
    assert isinstance(back, ParabolaG)
    assert abs(back.focus - parabola.focus) < 1e-12
    assert same_line(back.directrix, parabola.directrix, 1e-10)


def test_degenerate_conic_gets_a_tag():
    assert conic_to_geometric(ConicQ.from_matrix(np.diag([1.0, -1.0, 0.0]))) == "degenerate"
    hyper = ConicQ.from_matrix(np.diag([1.0, -1.0, -1.0]))
    assert conic_to_geometric(hyper) == "hyperbola"


# ---------------------------------------------------------------------------
# Tangency residual and ray-circle intersection
# ---------------------------------------------------------------------------

def test_tangency_residual_of_vertical_tangent():
    circle = conic_from_circle(UNIT_CIRCLE)
    assert abs(line_conic_tangency_residual(HLine(1.0, 0.0, -1.0), circle)) < 1e-15


def test_tangency_residual_sign_separates_secant_and_missing_lines():
    circle = conic_from_circle(UNIT_CIRCLE)
    missing = line_conic_tangency_residual(HLine(1.0, 0.0, -2.0), circle)
    secant = line_conic_tangency_residual(HLine(1.0, 0.0, 0.0), circle)
    assert missing != 0.0 and secant != 0.0
    assert (missing > 0) != (secant > 0)


def test_constructed_tangent_has_tiny_residual():
    ellipse = EllipseG(0.2 - 0.1j, 1.1, 0.7, 0.3)
    conic = conic_from_ellipse(ellipse)
    for t in np.linspace(0, 2 * math.pi, 17):
        p = ellipse.point_at(t)
        assert abs(line_conic_tangency_residual(polar_line(p, conic), conic)) < 1e-12


def test_ray_exits_circle_from_inside():
    assert ray_circle_intersection(0j, 0.5 + 0j, UNIT_CIRCLE) == pytest.approx(1 + 0j)


def test_ray_hits_worked_rotation_point():
    through = (1.0 / 12.0) * cmath.exp(4j * math.pi / 3.0)
    hit = ray_circle_intersection(0j, through, UNIT_CIRCLE)
    assert abs(hit - cmath.exp(4j * math.pi / 3.0)) < 1e-14


def test_ray_pointing_away_misses():
    with pytest.raises(GeometryError):
        ray_circle_intersection(2 + 0j, 3 + 0j, UNIT_CIRCLE)


def test_ray_from_outside_returns_entry_point():
    assert ray_circle_intersection(2 + 0j, 0j, UNIT_CIRCLE) == pytest.approx(1 + 0j)


# ---------------------------------------------------------------------------
# Misc kernel types
# ---------------------------------------------------------------------------

def test_principal_angle_range():
    for theta in np.linspace(-10, 10, 101):
        a = principal_angle(theta)
        assert -math.pi < a <= math.pi
        assert abs(cmath.exp(1j * a) - cmath.exp(1j * theta)) < 1e-12


def test_triangle_orientation_helpers():
    t = Triangle(1 + 0j, -1 + 0j, 1j)          # clockwise
    assert not t.is_ccw()
    assert t.oriented_ccw().is_ccw()
    assert t.canonical().is_ccw()


def test_line_normalization_convention():
    ln = HLine(-2.0, 0.0, 4.0).normalized()
    assert (ln.l, ln.m, ln.n) == pytest.approx((1.0, 0.0, -2.0))


def test_conic_normalization_is_scale_free():
    a = ConicQ.from_matrix(np.diag([1.0, 1.0, -1.0]))
    b = ConicQ.from_matrix(np.diag([-7.0, -7.0, 7.0]))
    assert a.proportionality_residual(b) < 1e-15


def test_kernel_tolerance_override_changes_degeneracy_cut():
    import poncelet.geom as geom
    # normalized determinant ~ 2.6e-6: valid at 1e-10, degenerate at 1e-3
    squashed = conic_from_ellipse(EllipseG(0j, 1.0, 0.04, 0.0))
    default = geom.DEGENERACY_TOL
    try:
        polar_line(2 + 0j, squashed)                   # fine at 1e-10
        geom.set_kernel_tolerance(1e-3)
        with pytest.raises(GeometryError):
            polar_line(2 + 0j, squashed)               # now classified degenerate
    finally:
        geom.set_kernel_tolerance(default)
    with pytest.raises(GeometryError):
        geom.set_kernel_tolerance(-1.0)
