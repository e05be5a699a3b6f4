"""Deterministic RNG seed derivation.

random.Random(obj) falls back to hash(obj) for tuples, and string hashing is
randomized per process; deriving sub-seeds through a digest keeps every
seeded search reproducible across runs and machines.
"""

import hashlib
import random


def derive_seed(*parts):
    digest = hashlib.sha256(repr(parts).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def derived_rng(*parts):
    return random.Random(derive_seed(*parts))
