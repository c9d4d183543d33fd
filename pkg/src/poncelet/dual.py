"""Tangential (polar-image) families of a circle-inscribed Poncelet family.

The tangents to the circumcircle at a member's vertices bound its tangential
triangle; over the whole family those triangles circumscribe the unit circle
and stay inscribed in the polar image of the caustic with respect to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._search import refine_minimum
from .centers import tangential_triangle
from .family import FamilyConfig, caustic_conic, triangle_at, vertices_at
from .geom import (
    TWO_PI,
    UNIT_CIRCLE,
    ConicQ,
    GeometryError,
    Triangle,
    polar_image_of_conic,
)


@dataclass(frozen=True)
class DualFamilySample:
    """One member of the tangential family, with its enclosing conic."""

    lam: complex
    reference: Triangle
    tangential: Triangle | None      # None when a vertex pair is antipodal
    outer_conic: ConicQ

    @property
    def degenerate(self) -> bool:
        return self.tangential is None


def outer_conic_of(cfg: FamilyConfig) -> ConicQ:
    """Polar image of the caustic with respect to the unit circle; the
    tangential triangles' vertices all lie on it."""
    return polar_image_of_conic(caustic_conic(cfg), UNIT_CIRCLE)


def tangential_family_at(cfg: FamilyConfig, lam: complex,
                         outer: ConicQ | None = None) -> DualFamilySample:
    reference = triangle_at(cfg, lam)
    if outer is None:
        outer = outer_conic_of(cfg)
    try:
        tangential = tangential_triangle(reference, UNIT_CIRCLE)
    except GeometryError:
        tangential = None
    return DualFamilySample(complex(lam), reference, tangential, outer)


def tangential_envelope_residual(cfg: FamilyConfig, samples: int = 90) -> float:
    """Max conic residual of tangential vertices on the polar-image conic."""
    outer = outer_conic_of(cfg)
    worst = 0.0
    for phase in np.linspace(0.0, TWO_PI, samples, endpoint=False):
        sample = tangential_family_at(cfg, np.exp(1j * phase), outer)
        if sample.tangential is None:
            continue
        worst = max(worst, max(abs(outer.evaluate(v))
                               for v in sample.tangential.vertices))
    return worst


def tangential_spreads(cfg: FamilyConfig, phases) -> np.ndarray:
    """Side-length spread of each tangential member; inf where degenerate.

    Vectorized: the tangents at unit-circle points u, v meet at 2uv/(u+v),
    so everything reduces to array arithmetic on the member root triples.
    """
    verts = vertices_at(cfg, np.exp(1j * np.asarray(phases, dtype=float)))
    u, v, w = verts[..., 0], verts[..., 1], verts[..., 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        t1 = 2.0 * v * w / (v + w)
        t2 = 2.0 * w * u / (w + u)
        t3 = 2.0 * u * v / (u + v)
        sides = np.stack([np.abs(t2 - t3), np.abs(t3 - t1), np.abs(t1 - t2)], axis=-1)
    spread = sides.max(axis=-1) - sides.min(axis=-1)
    bad = (
        (np.abs(v + w) < 1e-9) | (np.abs(w + u) < 1e-9) | (np.abs(u + v) < 1e-9)
        | ~np.isfinite(spread)
    )
    return np.where(bad, np.inf, spread)


def min_tangential_spread(cfg: FamilyConfig, samples: int = 720) -> tuple[float, float]:
    """(phase, spread) of the most equilateral tangential member, found by a
    coarse scan plus golden-section refinement of the best local minima."""
    phases = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    coarse = tangential_spreads(cfg, phases)

    def spread_of(phi: float) -> float:
        return float(tangential_spreads(cfg, [phi])[0])

    return refine_minimum(spread_of, phases, coarse)


def dual_contains_equilateral(cfg: FamilyConfig, tol: float = 1e-6,
                              samples: int = 720) -> bool:
    """True iff the polar-image (tangential) family has an equilateral member,
    found by brute-force sweep; independent of the focal criterion."""
    _, spread = min_tangential_spread(cfg, samples)
    return spread < tol
