"""Tour of the tent-map pseudo-random source.

The whole cipher is driven by one scalar recurrence, so this is worth a
close look: orbits, byte keystreams, sort-index permutations, and the
sensitivity that makes the construction key-dependent.
"""

import numpy as np

from acfz import chaos
from acfz.chaos import TentMapState

# One step at a time: the orbit of 0.4 under mu=1.9.
state = TentMapState(0.4, mu=1.9)
orbit = []
for _ in range(8):
    state = chaos.step(state)
    orbit.append(state.x)
print("orbit of x0=0.4, mu=1.9:")
print("  " + "  ".join(f"{x:.5f}" for x in orbit))

# Keystream bytes: each iterate quantized with floor(x * 1e14) mod 256.
ks, _ = chaos.keystream_bytes(TentMapState(0.4), 16)
print("\nfirst 16 keystream bytes (after burn-in):", ks.hex())

# Byte statistics over a longer stream.
stream, _ = chaos.keystream_bytes(TentMapState(0.123456789), 65536)
arr = np.frombuffer(stream, dtype=np.uint8)
counts = np.bincount(arr, minlength=256)
p = counts[counts > 0] / arr.size
print(f"64 KiB stream: mean={arr.mean():.2f} (ideal 127.5), "
      f"entropy={-(p * np.log2(p)).sum():.4f} bits (ideal 8)")

# Sort-index permutations reorder pixels later on.
perm, _ = chaos.sort_index_permutation(TentMapState(0.4), 10)
print("\nlength-10 permutation:", [int(i) for i in perm])

# Sensitivity: a 2^-40 nudge of the seed decorrelates the stream almost
# immediately. This is what makes exhaustive key search hopeless.
a, _ = chaos.keystream_bytes(TentMapState(0.37), 1000)
b, _ = chaos.keystream_bytes(TentMapState(0.37 + 2**-40), 1000)
differing = sum(x != y for x, y in zip(a, b))
print(f"\nseed nudged by 2^-40: {differing}/1000 bytes differ")

# Continuation is exact: a split stream equals one long stream.
whole, _ = chaos.keystream_bytes(TentMapState(0.9), 100)
head, mid = chaos.keystream_bytes(TentMapState(0.9), 37)
tail, _ = chaos.keystream_bytes(mid, 63)
print("split stream equals one-shot stream:", head + tail == whole)
