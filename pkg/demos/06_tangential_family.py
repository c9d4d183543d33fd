"""The tangential (polar-image) family and its own stationary point.

Tangents to the circumcircle at a member's vertices bound the tangential
triangle; the whole tangential family circumscribes the unit circle and is
inscribed in the polar image of the caustic.  Its Feuerbach point X11 freezes
at the reference family's stationary focus, and its X65 locus is the circle
centered at f + g with radius |f g| -- through the origin exactly when the
family contains an equilateral.
"""

from poncelet import FamilyConfig, conic_to_geometric, outer_conic_of
from poncelet.dual import dual_contains_equilateral, tangential_envelope_residual
from poncelet.experiments import verify_feuerbach_stationary, verify_x65_circle
from poncelet.family import contains_equilateral

cfg = FamilyConfig(0.5 + 0j, -1.0 / 3.0 + 0j)

outer = conic_to_geometric(outer_conic_of(cfg))
print(f"outer conic of the tangential family: center {outer.center:.4f}, "
      f"a = {outer.a:.4f}, b = {outer.b:.4f}")
print(f"tangential vertices sit on it to {tangential_envelope_residual(cfg):.2e}")

feuerbach = verify_feuerbach_stationary(cfg)
print(f"\nFeuerbach point of the tangential family: {feuerbach.status}, "
      f"max deviation {feuerbach.metrics['max_deviation']:.2e} "
      f"from the stationary focus -1")

for label, family in (("reference", cfg), ("control (0.3, 0.5)",
                                           FamilyConfig(0.3 + 0j, 0.5 + 0j))):
    x65 = verify_x65_circle(family)
    print(f"X65 locus, {label}: {x65.status}; center error "
          f"{x65.metrics['center_error']:.2e}, distance from origin "
          f"{x65.metrics['origin_distance']:.2e}")

# the polar image contains an equilateral iff the reference family does
for family in (cfg, FamilyConfig(0.3 + 0j, 0.5 + 0j),
               FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j)):
    primal = contains_equilateral(family)
    image = dual_contains_equilateral(family)
    print(f"f={family.f:.2f} g={family.g:.2f}: primal {primal!s:5s} "
          f"polar image {image!s:5s}")
    assert primal == image
