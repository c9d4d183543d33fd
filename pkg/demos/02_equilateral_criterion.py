"""When does a family contain an equilateral member?

Exactly when |f + g| = |f g| (equivalently, 1/f + 1/g lies on the unit
circle).  The demo evaluates the criterion on a few configurations and
confirms each answer by brute force: sweep the family and look for a member
with vanishing side-length spread.
"""

import cmath

from poncelet import FamilyConfig, contains_equilateral, equilateral_lambda
from poncelet.experiments import min_member_spread

cases = [
    ("reference (1/2, -1/3)", FamilyConfig(0.5 + 0j, -1.0 / 3.0 + 0j)),
    ("conjugate pair 0.2 +- 0.6i", FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j)),
    ("opposite foci +-0.3", FamilyConfig(0.3 + 0j, -0.3 + 0j)),
    ("generic (0.3, 0.5)", FamilyConfig(0.3 + 0j, 0.5 + 0j)),
    ("concentric (0, 0)", FamilyConfig(0j, 0j)),
]

for label, cfg in cases:
    criterion = contains_equilateral(cfg)
    phase, spread = min_member_spread(cfg)
    print(f"{label:32s} criterion={criterion!s:5s} "
          f"min sweep spread {spread:.2e} at phase {phase:+.4f}")
    assert criterion == (spread < 1e-6)

cfg = FamilyConfig(0.2 + 0.6j, 0.2 - 0.6j)
lam = equilateral_lambda(cfg)
print(f"\nconjugate-pair family: equilateral member at lambda = {lam:.6f} "
      f"(phase {cmath.phase(lam):+.4f})")
print("its vertices are the cube roots of that parameter.")
