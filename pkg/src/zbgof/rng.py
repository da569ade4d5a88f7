"""Deterministic per-replication random streams.

Every replication gets its own Philox generator.  The 128-bit key is derived
from ``(master_seed, stream_index)`` by :class:`numpy.random.SeedSequence` and
the replication index occupies the third counter word, so replication ``r``
draws from a block range disjoint from every other replication.  Results are
therefore independent of how replications are split across workers.

Output is frozen against numpy's Philox and Generator algorithms (numpy >= 1.24).
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox, SeedSequence

from .errors import InvalidInput

_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class SeedSpec:
    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        if not (0 <= int(self.master_seed) <= _U64):
            raise InvalidInput("master_seed must be a 64-bit unsigned integer")
        if int(self.stream_index) < 0:
            raise InvalidInput("stream_index must be nonnegative")

    def key(self) -> np.ndarray:
        return _key(int(self.master_seed), int(self.stream_index))

    def child(self, stream_index: int) -> "SeedSpec":
        return SeedSpec(self.master_seed, stream_index)

    def to_dict(self) -> dict:
        return {"master_seed": int(self.master_seed), "stream_index": int(self.stream_index)}


def _key(master: int, stream: int) -> np.ndarray:
    return SeedSequence([master, stream]).generate_state(2, np.uint64)


def replication_rng(seed: SeedSpec, replication: int) -> Generator:
    counter = np.array([0, 0, replication, 0], dtype=np.uint64)
    return Generator(Philox(key=seed.key(), counter=counter))


def stream_for(label: str) -> int:
    """Stable stream index for a textual cell label (not Python's salted hash)."""
    h = 1469598103934665603
    for ch in label.encode():
        h = ((h ^ ch) * 1099511628211) & _U64
    return h >> 1


def worker_cap(requested: int | None = None) -> int:
    """Worker count, capped by the ``ZBGOF_THREADS`` environment variable."""
    env = os.environ.get("ZBGOF_THREADS")
    cap = max(1, int(env)) if env and env.strip().isdigit() else None
    n = 1 if requested is None else max(1, int(requested))
    return min(n, cap) if cap is not None else n
