"""The vertex of the Kiepert in-parabola sweeps a circle.

With the focus frozen at X110 and the directrix (the Euler line) turning
through the circumcenter, the parabola's vertex traces the circle whose
diameter is the segment from X110 to X1511 (the midpoint of X3 and X110) --
length 1/2 on the unit circumcircle.
"""

import numpy as np

from poncelet import CenterIndex, FamilyConfig, fit_circle, sweep
from poncelet.experiments import verify_x3233_circle

cfg = FamilyConfig(0.5 + 0j, -1.0 / 3.0 + 0j)

pts = sweep(cfg, 360, {CenterIndex.X3233}).points(CenterIndex.X3233)
fit = fit_circle(pts)
print(f"fitted X3233 locus: center {fit.center:.9f}, radius {fit.radius:.9f}, "
      f"rms {fit.rms:.2e}")
print("expected from the diameter X110-X1511: center -3/4, radius 1/4")

report = verify_x3233_circle(cfg)
print(f"verifier: {report.status}; diameter length "
      f"{report.metrics['diameter_length']:.6f}")

# the same locus follows a rotated family around
rot = np.exp(0.9j)
turned = FamilyConfig(rot * cfg.f, rot * cfg.g)
fit2 = fit_circle(sweep(turned, 360, {CenterIndex.X3233}).points(CenterIndex.X3233))
print(f"rotated family: center {fit2.center:.6f} "
      f"(= rotated center: {rot * fit.center:.6f})")
