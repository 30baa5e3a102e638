"""Adaptive second phase: fuzzy-gated AES chaining and hash-XOR rounds.

Checkpoint 1 scores the pre-encrypted image's entropy (S-Dive); below the
t1 threshold the AES-chaining stage runs and a flag bit is recorded for
the decryptor. Checkpoint 2 scores differential diversity (D-Dive) from
NPCR/UACI between the main cipher and a companion cipher (the same
pipeline applied to a one-bit-modified plaintext); while the score stays
below t2 the hash-XOR stage is applied again, at most fifteen times, and
the round count is recorded.

Operands here may be any-shape uint8 arrays; the pipeline feeds 1-D
payloads padded to a 64-byte multiple, which also satisfies the 16-byte
alignment of the AES stage.
"""

from dataclasses import dataclass, field

import numpy as np

from . import chaos, fis, metrics
from .chaos import DEFAULT_BURN_IN, DEFAULT_MU, TentMapState
from .keyschedule import DerivedSeeds
from .primitives import aes128_decrypt_block, aes128_encrypt_block, sha512

AES_BLOCK = 16
HASH_BLOCK = 64
MAX_XOR_ROUNDS = 15


class BlockAlignment(ValueError):
    """Payload size is not a multiple of the stage's block size."""


@dataclass(frozen=True)
class Phase2Config:
    t1: float = 0.5
    t2: float = 0.5
    sec: float = 80.0
    max_xor_rounds: int = MAX_XOR_ROUNDS
    fis1: fis.FisConfig = field(default_factory=fis.fis1_default)
    fis2: fis.FisConfig = field(default_factory=fis.fis2_default)

    def __post_init__(self):
        if not 0.0 <= self.sec <= 100.0:
            raise ValueError("sec must be in [0, 100]")
        # The round count must fit the 4-bit key field.
        if not 0 <= self.max_xor_rounds <= MAX_XOR_ROUNDS:
            raise ValueError(f"max_xor_rounds must be in 0..{MAX_XOR_ROUNDS}")


@dataclass
class Phase2Outcome:
    """Cipher plus the control decisions the decryptor must replay.

    d_dive_history holds every checkpoint-2 evaluation; all but the last
    triggered a hash-XOR round unless the round cap cut the loop short,
    so len(d_dive_history) == xor_count + 1.
    """

    cipher: np.ndarray
    aes_flag: int
    xor_count: int
    s_dive: float
    d_dive_history: list[float]


def _perturbed(state: TentMapState, block_sum: int) -> TentMapState:
    # Feed the previous ciphertext block back into the whitening chain:
    # x <- frac(x + S/4096), S <= 16*255 < 4096. Step count is preserved
    # so the stream is not re-warmed.
    x = state.x + block_sum / 4096.0
    if x >= 1.0:
        x -= 1.0
    return TentMapState(x, state.mu, state.steps)


def aes_chaos_encrypt(
    img: np.ndarray,
    key: bytes,
    x_aes: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Whitened AES-128 over 16-byte blocks in a chaotic processing order.

    Blocks are visited in the sort-index order seeded by x_aes. Each block
    is XORed with 16 whitening keystream bytes, then AES-encrypted; the
    first block uses the given key, every later block is keyed by the
    previous ciphertext block, and each ciphertext's byte sum perturbs the
    whitening stream. Ciphertext blocks stay at their original positions.
    """
    arr = np.asarray(img, dtype=np.uint8)
    flat = arr.reshape(-1)
    if flat.size % AES_BLOCK:
        raise BlockAlignment(f"payload size {flat.size} not a multiple of {AES_BLOCK}")
    nblocks = flat.size // AES_BLOCK
    order, _ = chaos.sort_index_permutation(TentMapState(x_aes, mu), nblocks, burn_in)
    wstate = TentMapState(x_aes, mu)
    src = flat.tobytes()
    out = bytearray(src)
    block_key = key
    for t in range(nblocks):
        pos = int(order[t]) * AES_BLOCK
        white, wstate = chaos.keystream_bytes(wstate, AES_BLOCK, burn_in)
        block = bytes(p ^ w for p, w in zip(src[pos : pos + AES_BLOCK], white))
        cipher = aes128_encrypt_block(block, block_key)
        out[pos : pos + AES_BLOCK] = cipher
        block_key = cipher
        wstate = _perturbed(wstate, sum(cipher))
    return np.frombuffer(bytes(out), dtype=np.uint8).reshape(arr.shape)


def aes_chaos_decrypt(
    img: np.ndarray,
    key: bytes,
    x_aes: float,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> np.ndarray:
    """Exact inverse; order, keys and whitening rebuild from ciphertext."""
    arr = np.asarray(img, dtype=np.uint8)
    flat = arr.reshape(-1)
    if flat.size % AES_BLOCK:
        raise BlockAlignment(f"payload size {flat.size} not a multiple of {AES_BLOCK}")
    nblocks = flat.size // AES_BLOCK
    order, _ = chaos.sort_index_permutation(TentMapState(x_aes, mu), nblocks, burn_in)
    wstate = TentMapState(x_aes, mu)
    src = flat.tobytes()
    out = bytearray(src)
    block_key = key
    for t in range(nblocks):
        pos = int(order[t]) * AES_BLOCK
        white, wstate = chaos.keystream_bytes(wstate, AES_BLOCK, burn_in)
        cipher = src[pos : pos + AES_BLOCK]
        plain = aes128_decrypt_block(cipher, block_key)
        out[pos : pos + AES_BLOCK] = bytes(p ^ w for p, w in zip(plain, white))
        block_key = cipher
        wstate = _perturbed(wstate, sum(cipher))
    return np.frombuffer(bytes(out), dtype=np.uint8).reshape(arr.shape)


def _hash_pad(image_hash: bytes, nblocks: int) -> np.ndarray:
    # Per-block hash words: block 1 gets the image hash itself, block k
    # gets sha512(hash || k). A plaintext change flips the hash and with
    # it every pad word, so ciphertext differences are full-entropy at
    # every position instead of repeating one 64-byte pattern.
    words = [image_hash]
    for k in range(2, nblocks + 1):
        words.append(sha512(image_hash + k.to_bytes(8, "big")))
    return np.frombuffer(b"".join(words), dtype=np.uint8).reshape(nblocks, HASH_BLOCK)


def xor_by_hash(img: np.ndarray, image_hash: bytes) -> np.ndarray:
    """Chain 64-byte blocks: c1 = b1 ^ hash, ck = bk ^ c(k-1) ^ H(k).

    H(k) is the k-th hash-chain word of _hash_pad; H(1) is the image
    hash, so the first block matches the plain chain exactly.
    """
    arr = np.asarray(img, dtype=np.uint8)
    flat = arr.reshape(-1)
    if flat.size % HASH_BLOCK:
        raise BlockAlignment(f"payload size {flat.size} not a multiple of {HASH_BLOCK}")
    blocks = flat.reshape(-1, HASH_BLOCK)
    out = np.bitwise_xor.accumulate(blocks ^ _hash_pad(image_hash, blocks.shape[0]), axis=0)
    return out.reshape(arr.shape)


def xor_by_hash_inverse(img: np.ndarray, image_hash: bytes) -> np.ndarray:
    """Unchain: b1 = c1 ^ hash, bk = ck ^ c(k-1) ^ H(k), from received blocks."""
    arr = np.asarray(img, dtype=np.uint8)
    flat = arr.reshape(-1)
    if flat.size % HASH_BLOCK:
        raise BlockAlignment(f"payload size {flat.size} not a multiple of {HASH_BLOCK}")
    blocks = flat.reshape(-1, HASH_BLOCK)
    out = blocks.copy()
    out[1:] ^= blocks[:-1]
    out ^= _hash_pad(image_hash, blocks.shape[0])
    return out.reshape(arr.shape)


def run_phase2(
    pre_img: np.ndarray,
    seeds: DerivedSeeds,
    image_hash: bytes,
    config: Phase2Config,
    companion: np.ndarray,
    companion_hash: bytes,
    mu: float = DEFAULT_MU,
    burn_in: int = DEFAULT_BURN_IN,
) -> Phase2Outcome:
    """Drive both checkpoints over the main and companion payloads.

    The companion is the phase-1 output of the one-bit-modified twin and
    follows the identical stages with its own hash, standing in for a
    genuinely different plaintext when NPCR/UACI are measured.
    """
    main = np.asarray(pre_img, dtype=np.uint8)
    comp = np.asarray(companion, dtype=np.uint8)
    if main.shape != comp.shape:
        raise metrics.DimensionMismatch("companion shape differs from main payload")

    s_dive = fis.evaluate(
        config.fis1, {"Entropy": metrics.entropy(main), "SEC": config.sec}
    )
    if s_dive < config.t1:
        aes_flag = 1
        main = aes_chaos_encrypt(main, seeds.phase2_key, seeds.x_aes, mu, burn_in)
        comp = aes_chaos_encrypt(comp, seeds.phase2_key, seeds.x_aes, mu, burn_in)
    else:
        aes_flag = 0

    d_history: list[float] = []
    xor_count = 0
    while True:
        d_dive = fis.evaluate(
            config.fis2,
            {
                "UACI": metrics.uaci(main, comp),
                "NPCR": metrics.npcr(main, comp),
                "SEC": config.sec,
            },
        )
        d_history.append(d_dive)
        if d_dive < config.t2 and xor_count < config.max_xor_rounds:
            main = xor_by_hash(main, image_hash)
            comp = xor_by_hash(comp, companion_hash)
            xor_count += 1
        else:
            break

    return Phase2Outcome(main, aes_flag, xor_count, s_dive, d_history)
