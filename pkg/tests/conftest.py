import numpy as np
import pytest

from poncelet.geom import TWO_PI, Triangle


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_inscribed_triangle(rng, acute=False):
    """Random triangle on the unit circle; optionally resample until acute
    (all circle arcs between consecutive vertices below pi)."""
    while True:
        phases = np.sort(rng.uniform(0.0, TWO_PI, 3))
        gaps = np.diff(np.concatenate([phases, [phases[0] + TWO_PI]]))
        if np.min(gaps) < 0.05:
            continue
        if acute and np.max(gaps) >= np.pi - 0.05:
            continue
        return Triangle(*np.exp(1j * phases))


def random_disk_point(rng, radius=0.95):
    return complex(radius * np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0.0, TWO_PI)))
