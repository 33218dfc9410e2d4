"""Seeded sensor-noise models: salt & pepper, additive gaussian, speckle.

Reproducibility contract: all draws come from numpy's PCG64 bit generator
(PCG XSL RR 128/64) seeded with the caller's 64-bit seed, consumed as
uniform float64 in [0, 1) in row-major pixel order. Normal variates use
the trigonometric Box-Muller transform, two uniforms per pair of normals:

    z0 = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)
    z1 = sqrt(-2 ln(1 - u1)) * sin(2 pi u2)

with pairs interleaved (z0, z1, z0, z1, ...) along the row-major pixel
stream. Salt & pepper consumes one uniform per pixel (corruption decision,
row-major), then one extra uniform per corrupted pixel (again row-major):
flip < 0.5 means pepper (0), otherwise salt (255). Identical inputs and
seed give bit-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NOISE_KINDS = ("salt_pepper", "gaussian", "speckle")


@dataclass(frozen=True)
class NoiseSpec:
    kind: str
    density: float = 0.05  # salt_pepper: per-pixel corruption probability
    sigma: float = 25.5  # gaussian: std-dev on the [0, 255] scale
    variance: float = 0.04  # speckle: variance of the multiplicative normal
    seed: int = 42

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")
        if self.sigma < 0:
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if self.variance < 0:
            raise ValueError(f"variance must be >= 0, got {self.variance}")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _standard_normals(rng: np.random.Generator, n: int) -> np.ndarray:
    """n standard normals via Box-Muller over the uniform stream."""
    pairs = (n + 1) // 2
    u = rng.random((pairs, 2))
    radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
    angle = 2.0 * np.pi * u[:, 1]
    z = np.empty(2 * pairs)
    z[0::2] = radius * np.cos(angle)
    z[1::2] = radius * np.sin(angle)
    return z[:n]


def add_salt_pepper(img: np.ndarray, density: float, seed: int) -> np.ndarray:
    """Corrupt each pixel to 0 or 255 (equal odds) with probability density."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    img = np.asarray(img, dtype=np.float64)
    rng = _rng(seed)
    corrupt = rng.random(img.size) < density
    flips = rng.random(int(corrupt.sum()))
    out = img.flatten()
    out[corrupt] = np.where(flips < 0.5, 0.0, 255.0)
    return out.reshape(img.shape)


def add_gaussian(img: np.ndarray, sigma: float, seed: int) -> np.ndarray:
    """Add i.i.d. normal(0, sigma^2) and clip to [0, 255]."""
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    img = np.asarray(img, dtype=np.float64)
    z = _standard_normals(_rng(seed), img.size).reshape(img.shape)
    return np.clip(img + sigma * z, 0.0, 255.0)


def add_speckle(img: np.ndarray, variance: float, seed: int) -> np.ndarray:
    """Multiplicative noise: clip(img + img * n, 0, 255), n ~ normal(0, variance)."""
    if variance < 0:
        raise ValueError(f"variance must be >= 0, got {variance}")
    img = np.asarray(img, dtype=np.float64)
    z = _standard_normals(_rng(seed), img.size).reshape(img.shape)
    return np.clip(img + img * (np.sqrt(variance) * z), 0.0, 255.0)


def apply_noise(img: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    if spec.kind == "salt_pepper":
        return add_salt_pepper(img, spec.density, spec.seed)
    if spec.kind == "gaussian":
        return add_gaussian(img, spec.sigma, spec.seed)
    return add_speckle(img, spec.variance, spec.seed)
