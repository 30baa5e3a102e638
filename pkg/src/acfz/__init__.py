"""Adaptive chaotic-fuzzy grayscale image encryption toolkit.

A two-phase symmetric cipher for 8-bit grayscale images — tent-map
keystream XOR, chaotic pixel shuffling and genetic-crossover diffusion,
followed by fuzzy-gated AES block chaining and hash-XOR rounds — plus the
security-analysis suite (entropy, directional correlation, NPCR, UACI,
histogram) used to evaluate it.
"""

from .chaos import DEFAULT_BURN_IN, DEFAULT_MU, TentMapState
from .keyschedule import (
    DerivedSeeds,
    derive_seeds,
    key_space_bits,
    pack_decryption_key,
    unpack_decryption_key,
)
from .metrics import SecurityReport, build_report, correlation, entropy, npcr, uaci
from .pipeline import EncryptionResult, RunConfig, decrypt_payload, encrypt_image
from .primitives import aes128_decrypt_block, aes128_encrypt_block, sha512

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BURN_IN",
    "DEFAULT_MU",
    "DerivedSeeds",
    "EncryptionResult",
    "RunConfig",
    "SecurityReport",
    "TentMapState",
    "aes128_decrypt_block",
    "aes128_encrypt_block",
    "build_report",
    "correlation",
    "decrypt_payload",
    "derive_seeds",
    "encrypt_image",
    "entropy",
    "key_space_bits",
    "npcr",
    "pack_decryption_key",
    "sha512",
    "uaci",
    "unpack_decryption_key",
    "__version__",
]
