"""Seeded random instance generation.

Two modes: independent cells at a fixed density, or a planted instance
that starts from a random staircase matrix (both the interval starts and
ends increase row by row, so rows and columns are simultaneously
consecutive under the identity orders) and then applies a fixed number of
noise flips.  All draws come from one random.Random(seed) in a fixed
order, so outputs are reproducible.
"""

import random

from .matrix import BinaryMatrix


def gen_instance(rows, cols, density=None, planted_flips=None, seed=0):
    """Random matrix: density mode or planted-staircase-plus-noise mode."""
    if rows < 0 or cols < 0:
        raise ValueError("dimensions must be nonnegative")
    if (density is None) == (planted_flips is None):
        raise ValueError("give exactly one of density and planted_flips")
    rng = random.Random(seed)

    if density is not None:
        if not 0 <= density <= 1:
            raise ValueError("density must be within [0, 1]")
        masks = []
        for _ in range(rows):
            mask = 0
            for j in range(cols):
                if rng.random() < density:
                    mask |= 1 << j
            masks.append(mask)
        return BinaryMatrix.from_masks(masks, cols)

    if planted_flips < 0 or planted_flips > rows * cols:
        raise ValueError("planted_flips must be within [0, rows*cols]")
    starts = sorted(rng.randint(0, cols) for _ in range(rows))
    masks = []
    prev_end = 0
    for a in starts:
        e = max(a + rng.randint(0, cols - a), prev_end)
        prev_end = e
        masks.append(((1 << (e - a)) - 1) << a)
    for cell in rng.sample(range(rows * cols), planted_flips):
        masks[cell // cols] ^= 1 << (cell % cols)
    return BinaryMatrix.from_masks(masks, cols)
