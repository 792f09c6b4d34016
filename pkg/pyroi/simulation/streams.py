"""
Counter-based random substreams for the Monte Carlo engine.

Every random number used by a simulation is addressed by (seed, stream,
index) rather than drawn from a running generator state. The underlying
bit generator is numpy's Philox-4x64 (period 2**256), a counter-based
generator whose output block for counter c under key k is a fixed bijective
mixing of (c, k). Keys are derived from the seed with a SeedSequence, one
per stream:

    - the case stream supplies the deviates that build the project case,
    - the draw stream supplies the deviates (u_i, v_i) of iteration i.

Because iteration i always reads the block addressed by counter i, results
do not depend on how the iteration range is chunked or in which order
chunks are evaluated.
"""

import numpy as np

BLOCK_WORDS = 4
_TO_UNIT = 2.0**-53


class Substreams:
    """
    Deterministic random substreams derived from a single 64-bit seed.

    Attributes:
        seed (int): The seed all substreams are derived from.
    """

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")

        self.seed = seed

        state = np.random.SeedSequence(seed).generate_state(4, dtype=np.uint64)
        self._case_key = state[0:2]
        self._draw_key = state[2:4]

    def case_deviates(self) -> np.ndarray:
        """Four uniform deviates in [0, 1) reserved for case construction."""
        return _unit_blocks(self._case_key, 0, 1)[0]

    def draw_deviates(self, start: int, stop: int) -> np.ndarray:
        """Uniform deviates in [0, 1) for iterations start, ..., stop - 1.

        Returns:
            np.ndarray: Array of shape (stop - start, 4), row k belonging to
                iteration start + k.
        """
        if not 0 <= start <= stop:
            raise ValueError(f"invalid iteration range [{start}, {stop})")
        return _unit_blocks(self._draw_key, start, stop)

    def relative_deviates(self, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
        """Deviates (u, v) uniform on [-1, 1) for benefit and cost sampling."""
        block = self.draw_deviates(start, stop)
        return 2.0 * block[:, 0] - 1.0, 2.0 * block[:, 1] - 1.0


def _unit_blocks(key: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Philox output blocks for counters start..stop-1 mapped to [0, 1)"""
    count = stop - start
    if count == 0:
        return np.empty((0, BLOCK_WORDS), dtype=np.float64)

    # A fresh Philox advances its counter before producing the first block,
    # so counter i + 1 is used for index i irrespective of the chunk start.
    bit_generator = np.random.Philox(counter=start, key=key)
    raw = bit_generator.random_raw(count * BLOCK_WORDS)

    # Top 53 bits give an exactly representable double in [0, 1)
    unit = (raw >> np.uint64(11)).astype(np.float64) * _TO_UNIT
    return unit.reshape(count, BLOCK_WORDS)
