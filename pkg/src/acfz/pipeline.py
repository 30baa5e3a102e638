"""End-to-end encryption and decryption of grayscale images.

Encryption runs the three phase-1 transforms, pads the flattened result
with zero bytes to a 64-byte multiple, and drives the adaptive phase 2
alongside a companion pipeline (the plaintext with the least-significant
bit of pixel (0,0) flipped) that supplies the differential metrics. The
returned payload goes into the cipher container; the 130-byte decryption
key records everything the decryptor needs besides the tunables.

Decryption replays the recorded decisions in reverse and never consults
the fuzzy systems. Tunables that are not part of the key (mu, burn-in,
thresholds only matter for encryption) must match the encrypting run.
"""

from dataclasses import dataclass

import numpy as np

from . import fis, phase1, phase2
from .chaos import DEFAULT_BURN_IN, DEFAULT_MU
from .keyschedule import derive_seeds, pack_decryption_key, unpack_decryption_key
from .phase2 import HASH_BLOCK, Phase2Config
from .primitives import sha512


@dataclass(frozen=True)
class RunConfig:
    """Operator-facing tunables with their scheme-wide defaults."""

    sec: float = 80.0
    mu: float = DEFAULT_MU
    t1: float = 0.5
    t2: float = 0.5
    burn_in: int = DEFAULT_BURN_IN
    fis1: fis.FisConfig | None = None
    fis2: fis.FisConfig | None = None

    def __post_init__(self):
        if not 0.0 <= self.sec <= 100.0:
            raise ValueError("sec must be in [0, 100]")
        if not 0.0 < self.mu < 2.0:
            raise ValueError("mu must be in (0, 2)")
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")


@dataclass
class EncryptionResult:
    payload: bytes  # padded ciphertext for the container
    width: int
    height: int
    decryption_key: bytes  # 130-byte key file content
    s_dive: float
    aes_flag: int
    xor_count: int
    d_dive_history: list[float]


def _padded(flat: np.ndarray) -> np.ndarray:
    extra = -flat.size % HASH_BLOCK
    if extra == 0:
        return flat
    return np.concatenate([flat, np.zeros(extra, dtype=np.uint8)])


def companion_plain(img: np.ndarray) -> np.ndarray:
    """The one-bit-modified twin: LSB of pixel (0,0) flipped."""
    twin = np.array(img, dtype=np.uint8, copy=True)
    twin[0, 0] ^= 1
    return twin


def encrypt_image(
    img: np.ndarray, master: bytes, config: RunConfig = RunConfig()
) -> EncryptionResult:
    """Encrypt one image under a 64-byte master key."""
    arr = phase1.ensure_gray_image(img)
    height, width = arr.shape
    seeds = derive_seeds(master)
    image_hash = sha512(arr.tobytes())

    twin = companion_plain(arr)
    twin_hash = sha512(twin.tobytes())

    pre = _padded(phase1.phase1_encrypt(arr, seeds, config.mu, config.burn_in).reshape(-1))
    twin_pre = _padded(
        phase1.phase1_encrypt(twin, seeds, config.mu, config.burn_in).reshape(-1)
    )

    p2 = Phase2Config(
        t1=config.t1,
        t2=config.t2,
        sec=config.sec,
        fis1=config.fis1 or fis.fis1_default(),
        fis2=config.fis2 or fis.fis2_default(),
    )
    outcome = phase2.run_phase2(
        pre, seeds, image_hash, p2, twin_pre, twin_hash, config.mu, config.burn_in
    )
    key_file = pack_decryption_key(
        master, image_hash, outcome.aes_flag, outcome.xor_count
    )
    return EncryptionResult(
        payload=outcome.cipher.tobytes(),
        width=width,
        height=height,
        decryption_key=key_file,
        s_dive=outcome.s_dive,
        aes_flag=outcome.aes_flag,
        xor_count=outcome.xor_count,
        d_dive_history=outcome.d_dive_history,
    )


def decrypt_payload(
    payload: bytes,
    width: int,
    height: int,
    key_file: bytes,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Recover the plaintext image from a container payload and key file."""
    master, image_hash, aes_flag, xor_count = unpack_decryption_key(key_file)
    if len(payload) % HASH_BLOCK or len(payload) < width * height:
        raise ValueError(
            f"payload of {len(payload)} bytes invalid for {width}x{height}"
        )
    seeds = derive_seeds(master)
    data = np.frombuffer(payload, dtype=np.uint8)
    for _ in range(xor_count):
        data = phase2.xor_by_hash_inverse(data, image_hash)
    if aes_flag:
        data = phase2.aes_chaos_decrypt(data, seeds.phase2_key, seeds.x_aes, mu, burn_in)
    pre = data[: width * height].reshape(height, width)
    return phase1.phase1_decrypt(pre, seeds, mu, burn_in)
