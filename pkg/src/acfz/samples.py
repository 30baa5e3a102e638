"""Deterministic synthetic grayscale test images.

Stand-ins for the classic 256x256 test set (lena, cameraman, baboon,
plain, ship, peppers), built from seeded smooth random fields plus low
frequency structure so they behave like photographs: strongly correlated
adjacent pixels, uneven histograms, nonzero detail. Exact pixel values
are reproducible across runs and platforms.
"""

import numpy as np

SAMPLE_NAMES = ("lena", "cameraman", "baboon", "plain", "ship", "peppers")

# (seed, coarse grid cells, detail amplitude, wave amplitude)
_PARAMS = {
    "lena": (101, 12, 6.0, 40.0),
    "cameraman": (202, 8, 4.0, 55.0),
    "baboon": (303, 24, 14.0, 30.0),
    "plain": (404, 6, 3.0, 60.0),
    "ship": (505, 10, 8.0, 45.0),
    "peppers": (606, 14, 7.0, 50.0),
}


def _bilinear(coarse: np.ndarray, size: int) -> np.ndarray:
    m = coarse.shape[0]
    t = np.linspace(0.0, m - 1.0, size)
    i0 = np.floor(t).astype(np.intp)
    i1 = np.minimum(i0 + 1, m - 1)
    f = t - i0
    rows = coarse[i0] * (1.0 - f)[:, None] + coarse[i1] * f[:, None]
    return rows[:, i0] * (1.0 - f)[None, :] + rows[:, i1] * f[None, :]


def sample_image(name: str, size: int = 256) -> np.ndarray:
    """One named synthetic image as a size x size uint8 array."""
    if name not in _PARAMS:
        raise KeyError(f"unknown sample {name!r}; choose from {SAMPLE_NAMES}")
    seed, cells, detail_amp, wave_amp = _PARAMS[name]
    rng = np.random.default_rng(seed)

    coarse = rng.uniform(-1.0, 1.0, (cells + 1, cells + 1))
    base = _bilinear(coarse, size)

    yy, xx = np.mgrid[0:size, 0:size] / size
    waves = (
        np.sin(2.0 * np.pi * (1.7 * xx + 0.6 * yy) + seed)
        + 0.6 * np.cos(2.0 * np.pi * (0.9 * yy - 2.3 * xx) + 0.5 * seed)
    )
    gradient = 0.8 * xx + 0.5 * yy

    detail = _bilinear(rng.uniform(-1.0, 1.0, (4 * cells + 1, 4 * cells + 1)), size)

    img = (
        128.0
        + 52.0 * base
        + wave_amp * waves / 1.6
        + 30.0 * (gradient - 0.65)
        + detail_amp * detail
    )
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def standard_images(size: int = 256) -> dict[str, np.ndarray]:
    """All six named samples, keyed by name."""
    return {name: sample_image(name, size) for name in SAMPLE_NAMES}
