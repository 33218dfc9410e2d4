"""Square-pixel and variable-pixel image formation.

An image is processed in 6x6 blocks. The square baseline replaces each
block with its mean; a variable scan replaces each mask region with that
region's mean, so every block becomes piecewise constant over two regions.
The fused scan picks the best mask per block from a mask set and also
emits the per-pixel region-label map that drives adaptive filtering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .masks import MASK_SIZE, Mask, MaskSet

BLOCK = MASK_SIZE

CRITERIA = ("recon-error", "mean-diff")


@dataclass
class ScanResult:
    image: np.ndarray  # piecewise-constant within each block region
    labels: np.ndarray  # int64 region bits, aligned with image (all 0 for square)
    chosen_masks: np.ndarray | None  # (blocks_y, blocks_x) indices, fused scans only
    block_grid: tuple[int, int]  # (blocks_x, blocks_y)


def pad_to_block_multiple(img: np.ndarray) -> np.ndarray:
    """Edge-replicate on the right/bottom up to the next multiple of 6."""
    h, w = img.shape
    pad_h = (-h) % BLOCK
    pad_w = (-w) % BLOCK
    if pad_h == 0 and pad_w == 0:
        return img
    return np.pad(img, ((0, pad_h), (0, pad_w)), mode="edge")


def _check_block_dims(img: np.ndarray) -> tuple[int, int]:
    h, w = img.shape
    if h % BLOCK or w % BLOCK:
        raise ValueError(f"image dimensions {w}x{h} are not multiples of {BLOCK}")
    return w // BLOCK, h // BLOCK


def apply_mask_to_block(block: np.ndarray, m: Mask):
    """Replace each mask region with its mean.

    Returns (output block, recon_error) where recon_error is the sum of
    squared deviations of the output from the input over the 36 cells.
    """
    return _apply_regions(np.asarray(block, dtype=np.float64), m.cells == 0)


def _apply_regions(block: np.ndarray, region0: np.ndarray):
    m0 = block[region0].mean()
    m1 = block[~region0].mean()
    out = np.where(region0, m0, m1)
    err = float(((block - out) ** 2).sum())
    return out, err


def _region_mean_diff(block: np.ndarray, region0: np.ndarray) -> float:
    return abs(float(block[region0].mean()) - float(block[~region0].mean()))


def select_mask(block: np.ndarray, maskset: MaskSet, criterion: str = "recon-error"):
    """Pick the best mask for one block; ties go to the lowest index.

    `recon-error` minimizes the squared deviation of apply_mask_to_block;
    `mean-diff` minimizes the absolute difference of the two region means.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"unknown selection criterion {criterion!r}")
    if len(maskset) == 0:
        raise ValueError("empty mask set")
    block = np.asarray(block, dtype=np.float64)
    best_index, best_score = 0, None
    for i, m in enumerate(maskset):
        region0 = m.cells == 0
        if criterion == "recon-error":
            _, score = _apply_regions(block, region0)
        else:
            score = _region_mean_diff(block, region0)
        if best_score is None or score < best_score:
            best_index, best_score = i, score
    return best_index, best_score


def _blocks(img: np.ndarray):
    bx, by = _check_block_dims(img)
    for r in range(by):
        for c in range(bx):
            yield r, c, img[r * BLOCK : (r + 1) * BLOCK, c * BLOCK : (c + 1) * BLOCK]


def scan_square(img: np.ndarray) -> ScanResult:
    """Replace every 6x6 block with its arithmetic mean (square baseline)."""
    img = np.asarray(img, dtype=np.float64)
    bx, by = _check_block_dims(img)
    out = np.empty_like(img)
    for r, c, block in _blocks(img):
        out[r * BLOCK : (r + 1) * BLOCK, c * BLOCK : (c + 1) * BLOCK] = block.mean()
    return ScanResult(out, np.zeros(img.shape, dtype=np.int64), None, (bx, by))


def scan_uniform(img: np.ndarray, m: Mask) -> ScanResult:
    """Scan the whole image with a single mask (one arm of the parallel array)."""
    img = np.asarray(img, dtype=np.float64)
    bx, by = _check_block_dims(img)
    region0 = m.cells == 0
    out = np.empty_like(img)
    for r, c, block in _blocks(img):
        out[r * BLOCK : (r + 1) * BLOCK, c * BLOCK : (c + 1) * BLOCK], _ = _apply_regions(
            block, region0
        )
    labels = np.tile(m.cells.astype(np.int64), (by, bx))
    return ScanResult(out, labels, None, (bx, by))


def scan_parallel_fused(
    img: np.ndarray, maskset: MaskSet, criterion: str = "recon-error"
) -> ScanResult:
    """Run all uniform scans and keep, per block, the selected mask's block.

    Equivalent to scanning each block with select_mask + apply_mask_to_block
    directly; the fused image carries the winning region bits as its labels
    and the winning indices in chosen_masks.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"unknown selection criterion {criterion!r}")
    if len(maskset) == 0:
        raise ValueError("empty mask set")
    img = np.asarray(img, dtype=np.float64)
    bx, by = _check_block_dims(img)
    regions = [m.cells == 0 for m in maskset]
    bits = [m.cells.astype(np.int64) for m in maskset]

    out = np.empty_like(img)
    labels = np.empty(img.shape, dtype=np.int64)
    chosen = np.empty((by, bx), dtype=np.int64)
    for r, c, block in _blocks(img):
        best_index, best_score, best_out = 0, None, None
        for i, region0 in enumerate(regions):
            applied, err = _apply_regions(block, region0)
            score = err if criterion == "recon-error" else _region_mean_diff(block, region0)
            if best_score is None or score < best_score:
                best_index, best_score, best_out = i, score, applied
        rs = slice(r * BLOCK, (r + 1) * BLOCK)
        cs = slice(c * BLOCK, (c + 1) * BLOCK)
        out[rs, cs] = best_out
        labels[rs, cs] = bits[best_index]
        chosen[r, c] = best_index
    return ScanResult(out, labels, chosen, (bx, by))


def block_labels(labels: np.ndarray, block: int = BLOCK) -> np.ndarray:
    """Scope region bits to their block: label = block_index * 2 + bit.

    Blocks are indexed row-major over the ceil(width/block) grid, so maps
    cropped back from a padded scan keep consistent block indices.
    """
    labels = np.asarray(labels, dtype=np.int64)
    h, w = labels.shape
    blocks_x = -(-w // block)
    r_block = np.arange(h) // block
    c_block = np.arange(w) // block
    index = r_block[:, None] * blocks_x + c_block[None, :]
    return index * 2 + labels
