"""Shared test fixtures."""

from __future__ import annotations

import numpy as np
import pytest

from varipix import builtin_masks


@pytest.fixture(scope="session")
def masks():
    return builtin_masks()


@pytest.fixture()
def rng():
    # Test-data generator, unrelated to the seeded noise generator under test.
    return np.random.default_rng(20240817)


def random_image(rng, h, w):
    return rng.random((h, w)) * 255.0


def random_labels(rng, h, w):
    return rng.integers(0, 2, size=(h, w), dtype=np.int64)
