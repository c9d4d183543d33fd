"""Two straight-line laws for the caustic center.

First: pick a target K on the circumcircle and an equilateral vertex A_eq.
Reflect the external bisector of angle K-X3-A_eq about the line X3-A_eq;
every admissible caustic center on that mirrored line pins the swept focus
X110 at K.  Second: for a fixed inscribed triangle, the inconic center yields
an equilateral-containing family exactly when it lies on the perpendicular
bisector of X3 X5, and rotating the center about X3 by alpha/3 + pi points
straight at a vertex of the equilateral member.
"""

import cmath
import math

from poncelet import FamilyConfig, external_bisector, reflect_point_in_line, triangle_at
from poncelet.experiments import (
    verify_prop_double_inv,
    verify_prop_l35,
    verify_prop_l35_vertex,
)
from poncelet.geom import line_point_direction

k_point = 1.0 + 0j
a_eq = cmath.exp(1j * math.pi / 3.0)

bisector = external_bisector(0j, k_point, a_eq)
mirror = line_point_direction(0j, a_eq)
direction = reflect_point_in_line(bisector.direction(), mirror)
print(f"external bisector direction: {bisector.direction():.4f}")
print(f"mirrored line direction:     {direction:.4f}  (the real axis)")

report = verify_prop_double_inv(k_point, a_eq)
print(f"double-inversion law: {report.status}; {report.samples} admissible centers, "
      f"max |X110 - K| = {report.metrics['max_deviation']:.2e}\n")

cfg = FamilyConfig(0.5 + 0j, -1.0 / 3.0 + 0j)
t_ref = triangle_at(cfg, 1j)
l35 = verify_prop_l35(t_ref)
print(f"perpendicular-bisector law: {l35.status}; "
      f"{l35.samples} centers tried, X110 pairwise spread "
      f"{l35.metrics['x110_pairwise_spread']:.2e}")
print(f"angle branches used: literal {l35.metrics['branch_literal']:.0f}, "
      f"flipped {l35.metrics['branch_flipped']:.0f}")

vertex = verify_prop_l35_vertex(t_ref, 1.0 / 12.0 + 0j)
print(f"rotation construction at the known center: {vertex.status}, "
      f"vertex distance {vertex.metrics['vertex_distance']:.2e}")
print("(hand case: X110 = -1, center 1/12 -> rotation by pi/3 + pi lands on "
      "e^(4i pi/3), a cube root of 1)")
