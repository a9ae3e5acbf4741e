"""Seed derivation for reproducible, worker-count independent sampling.

Every replica and every transaction draws from its own numpy ``Generator``
whose seed is ``stream_seed(master, index)``: the ``index+1``-th output of a
SplitMix64 sequence started at ``master``.
"""
from __future__ import annotations

import secrets

import numpy as np

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
PRNG_FAMILY = f"numpy.PCG64 (numpy {np.__version__}) seeded by SplitMix64 stream derivation"


def splitmix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_seed(master: int, index: int) -> int:
    if index < 0:
        raise ValueError("stream index must be non-negative")
    return splitmix64((master + _GAMMA * (index + 1)) & MASK64)


def stream(master: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(stream_seed(master, index)))


def entropy_seed() -> int:
    return secrets.randbits(64)


def resolve_seed(random_state) -> int:
    """Turn an sklearn-style ``random_state`` into a 64-bit master seed.

    ``None`` draws from OS entropy; an int is used as-is (mod 2**64); a numpy
    ``Generator``/``RandomState`` is consumed for 64 bits.
    """
    if random_state is None:
        return entropy_seed()
    if isinstance(random_state, (int, np.integer)):
        return int(random_state) & MASK64
    if isinstance(random_state, np.random.Generator):
        return int(random_state.integers(0, 2**63, dtype=np.int64)) * 2 + int(random_state.integers(0, 2))
    if isinstance(random_state, np.random.RandomState):
        return int(random_state.randint(0, 2**32, dtype=np.uint64)) << 32 | int(
            random_state.randint(0, 2**32, dtype=np.uint64))
    raise TypeError(f"cannot derive a seed from {type(random_state).__name__}")


def as_generator(random_state) -> np.random.Generator:
    if isinstance(random_state, np.random.Generator):
        return random_state
    return np.random.Generator(np.random.PCG64(resolve_seed(random_state)))
