"""Named, seedable random number generators.

Every stochastic operation in the package takes a generator explicitly.
Generators are built on Philox (counter-based), keyed by a global seed plus
a stream name, so independent parts of the pipeline draw from independent,
reproducible streams.
"""

import hashlib

import numpy as np


def named_rng(name: str, seed: int) -> np.random.Generator:
    """Generator for stream `name` under global `seed`.

    Same (name, seed) always yields the same stream; distinct names yield
    statistically independent streams.
    """
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    stream = int.from_bytes(digest[:8], "little")
    return np.random.Generator(np.random.Philox(key=(seed & 0xFFFFFFFFFFFFFFFF, stream)))
