"""First-phase image transforms: keystream XOR, pixel shuffle, crossover.

Images are 2-D uint8 numpy arrays (height x width, row-major), at least
2x2 so the metrics suite can form adjacent pairs. Every transform here is
a bijection for fixed seeds and has an exact inverse; the three stages
compose into the pre-encryption pipeline:

    crossover_diffuse(shuffle(xor_keystream(img, x0), x1), x2)
"""

import numpy as np

from . import chaos
from .chaos import DEFAULT_BURN_IN, DEFAULT_MU, TentMapState
from .keyschedule import DerivedSeeds


def ensure_gray_image(img: np.ndarray) -> np.ndarray:
    """Validate and return a 2-D uint8 image of at least 2x2 pixels."""
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D grayscale array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        raise ValueError(f"expected uint8 pixels, got {arr.dtype}")
    if arr.shape[0] < 2 or arr.shape[1] < 2:
        raise ValueError(f"image must be at least 2x2, got {arr.shape}")
    return arr


def xor_keystream(
    img: np.ndarray,
    seed: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """XOR each pixel (row-major) with one tent-map keystream byte.

    Applying the same call twice restores the image.
    """
    arr = ensure_gray_image(img)
    ks, _ = chaos.keystream_bytes(TentMapState(seed, mu), arr.size, burn_in)
    stream = np.frombuffer(ks, dtype=np.uint8).reshape(arr.shape)
    return arr ^ stream


def shuffle(
    img: np.ndarray,
    seed: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Reorder pixels by the sort-index permutation of the map orbit.

    Output position k receives input position perm[k].
    """
    arr = ensure_gray_image(img)
    perm, _ = chaos.sort_index_permutation(TentMapState(seed, mu), arr.size, burn_in)
    return arr.reshape(-1)[perm].reshape(arr.shape)


def unshuffle(
    img: np.ndarray,
    seed: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Exact inverse of shuffle: output position perm[k] receives input k."""
    arr = ensure_gray_image(img)
    perm, _ = chaos.sort_index_permutation(TentMapState(seed, mu), arr.size, burn_in)
    flat = np.empty(arr.size, dtype=np.uint8)
    flat[perm] = arr.reshape(-1)
    return flat.reshape(arr.shape)


def crossover_pixels(a: int, b: int, k: int) -> tuple[int, int]:
    """Single-point crossover: exchange the k least-significant bits."""
    if not 1 <= k <= 7:
        raise ValueError("crossover point k must be in 1..7")
    mask = (1 << k) - 1
    d = (a ^ b) & mask
    return a ^ d, b ^ d


def _crossover_trace(
    n: int, seed: float, mu: float, burn_in: int
) -> tuple[list[int], list[int]]:
    """Partner and crossover-point draws for every pixel, key-only data.

    For each i in 0..n-1: partner j is drawn mod n and redrawn while
    j == i, then the point k = 1 + (draw mod 7). Both streams come from
    one continuing map state, so the trace is reproducible from the seed.
    """
    state = TentMapState(seed, mu)
    x, mu_, steps = chaos._warmed(state, burn_in)
    scale = chaos._SCALE
    guard = chaos._guard_value
    partners = [0] * n
    points = [0] * n
    for i in range(n):
        while True:
            x = mu_ * x if x < 0.5 else mu_ * (1.0 - x)
            steps += 1
            if not 0.0 < x < 1.0:
                x = guard(steps)
            j = int(x * scale) % n
            if j != i:
                break
        x = mu_ * x if x < 0.5 else mu_ * (1.0 - x)
        steps += 1
        if not 0.0 < x < 1.0:
            x = guard(steps)
        partners[i] = j
        points[i] = 1 + int(x * scale) % 7
    return partners, points


def crossover_diffuse(
    img: np.ndarray,
    seed: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Bit-exchange each pixel with a chaotically chosen partner, in order."""
    arr = ensure_gray_image(img)
    n = arr.size
    partners, points = _crossover_trace(n, seed, mu, burn_in)
    px = bytearray(arr.tobytes())
    for i in range(n):
        j = partners[i]
        d = (px[i] ^ px[j]) & ((1 << points[i]) - 1)
        px[i] ^= d
        px[j] ^= d
    return np.frombuffer(bytes(px), dtype=np.uint8).reshape(arr.shape)


def crossover_undiffuse(
    img: np.ndarray,
    seed: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Replay the crossover trace in reverse order; exact inverse."""
    arr = ensure_gray_image(img)
    n = arr.size
    partners, points = _crossover_trace(n, seed, mu, burn_in)
    px = bytearray(arr.tobytes())
    for i in range(n - 1, -1, -1):
        j = partners[i]
        d = (px[i] ^ px[j]) & ((1 << points[i]) - 1)
        px[i] ^= d
        px[j] ^= d
    return np.frombuffer(bytes(px), dtype=np.uint8).reshape(arr.shape)


def phase1_encrypt(
    img: np.ndarray,
    seeds: DerivedSeeds,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Keystream XOR, then shuffle, then crossover: the pre-encrypted image."""
    out = xor_keystream(img, seeds.x0, mu, burn_in)
    out = shuffle(out, seeds.x1, mu, burn_in)
    return crossover_diffuse(out, seeds.x2, mu, burn_in)


def phase1_decrypt(
    img: np.ndarray,
    seeds: DerivedSeeds,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Invert the three stages in reverse order."""
    out = crossover_undiffuse(img, seeds.x2, mu, burn_in)
    out = unshuffle(out, seeds.x1, mu, burn_in)
    return xor_keystream(out, seeds.x0, mu, burn_in)
