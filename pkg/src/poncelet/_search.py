"""Scalar minimization helpers for sweep-based equilateral detection."""

from __future__ import annotations

import math

import numpy as np

from .geom import TWO_PI


def golden_min(fun, lo: float, hi: float, tol: float = 1e-12) -> tuple[float, float]:
    """Golden-section minimum of a scalar function on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fun(c), fun(d)
    while (b - a) > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fun(d)
    x = 0.5 * (a + b)
    return x, fun(x)


def local_minima_mask(values: np.ndarray) -> np.ndarray:
    """Cyclic local minima of a sampled curve (non-finite entries never count)."""
    finite = np.where(np.isfinite(values), values, np.inf)
    mask = (finite <= np.roll(finite, 1)) & (finite <= np.roll(finite, -1))
    return mask & np.isfinite(finite)


def refine_minimum(fun, phases: np.ndarray, coarse: np.ndarray,
                   top: int = 3, tol: float = 1e-12) -> tuple[float, float]:
    """Refine the best coarse local minima of a periodic curve.

    Returns the (phase, value) of the smallest refined minimum; the coarse
    curve must be sampled on the uniform grid ``phases`` over one period.
    """
    step = TWO_PI / len(phases)
    mask = local_minima_mask(coarse)
    order = np.argsort(np.where(mask, coarse, np.inf))[:top]
    best_phase, best_val = 0.0, math.inf
    for k in order:
        if not mask[k]:
            continue
        x, val = golden_min(fun, phases[k] - step, phases[k] + step, tol)
        if val < best_val:
            best_phase, best_val = x, val
    return best_phase, best_val


def refine_all_minima(fun, phases: np.ndarray, coarse: np.ndarray,
                      coarse_cutoff: float, zero_cutoff: float,
                      tol: float = 1e-12) -> list[tuple[float, float]]:
    """Refine every coarse local minimum below ``coarse_cutoff`` and keep the
    ones that converge below ``zero_cutoff``; phases are deduplicated."""
    step = TWO_PI / len(phases)
    mask = local_minima_mask(coarse) & (coarse < coarse_cutoff)
    found: list[tuple[float, float]] = []
    for k in np.nonzero(mask)[0]:
        x, val = golden_min(fun, phases[k] - step, phases[k] + step, tol)
        if val < zero_cutoff:
            x = x % TWO_PI
            if all(min(abs(x - p), TWO_PI - abs(x - p)) > 1e-6 for p, _ in found):
                found.append((x, val))
    return sorted(found)
