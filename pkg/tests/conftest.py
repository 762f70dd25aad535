from __future__ import annotations

import numpy as np
import pytest

from slicefock import FockParams, Quaternion, SliceSeries


@pytest.fixture
def rng():
    return np.random.default_rng(20250808)


@pytest.fixture
def fast_params():
    """Reduced-resolution disk parameters; still exact for the degrees used here."""
    return FockParams(n_r=48, n_theta=128, n_slices=16, degree=16)


def make_series(rng: np.random.Generator, degree: int) -> SliceSeries:
    return SliceSeries(rng.standard_normal((degree + 1, 4)))


def ball_point(rng: np.random.Generator, r_scale: float = 0.95) -> Quaternion:
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return Quaternion.from_components(v * r_scale * rng.uniform() ** 0.25)
