"""Seedable deterministic randomness.

Every key-generating or encrypting operation in this package takes an
explicit :class:`Rng` so that runs are reproducible bit for bit.  Child
streams are derived by hashing the parent seed token with a path, which
lets one root seed drive many independent, order-insensitive streams
(one per client, per round, per vector index, ...).
"""

from __future__ import annotations

import hashlib
import random


def _as_token(seed) -> bytes:
    if isinstance(seed, bytes):
        material = b"B" + seed
    elif isinstance(seed, str):
        material = b"S" + seed.encode("utf-8")
    elif isinstance(seed, int):
        material = b"I" + seed.to_bytes((seed.bit_length() + 8) // 8 + 1, "big", signed=True)
    else:
        raise TypeError(f"unsupported seed type: {type(seed).__name__}")
    return hashlib.sha256(material).digest()


class Rng:
    """Deterministic random stream with hash-derived child streams."""

    def __init__(self, seed, _token: bytes | None = None):
        self.token = _token if _token is not None else _as_token(seed)
        self._rand = random.Random(int.from_bytes(self.token, "big"))

    def child(self, *path) -> "Rng":
        """Derive an independent stream identified by `path` components."""
        h = hashlib.sha256(self.token)
        for part in path:
            h.update(b"\x1f")
            h.update(_as_token(part))
        return Rng(None, _token=h.digest())

    def uniform(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self._rand.randrange(bound)

    def bit(self) -> int:
        return self._rand.getrandbits(1)

    def bitvector(self, count: int) -> list[int]:
        word = self._rand.getrandbits(count) if count else 0
        return [(word >> i) & 1 for i in range(count)]

    def gauss(self, std_dev: float) -> float:
        return self._rand.gauss(0.0, std_dev)
