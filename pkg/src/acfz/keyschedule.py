"""Master-key derivation and the decryption-key file codec.

The 512-bit master key is hashed with SHA-512 and the digest is sliced
into four disjoint 128-bit fields: three tent-map seeds (x0, x1, x2) and
the second-phase AES key, whose integer value also yields the x_aes seed.
Seeds are exact 128-bit integers divided by 2^128 (the float truncates to
53 significant bits; the slicing itself is exact).

The decryption key is a 1029-bit record: master key (512) || plain-image
hash (512) || AES-stage flag (1) || XOR-round count (4). On disk it is
framed as 130 bytes: a 1-byte version tag, the 1029 payload bits MSB-first,
and 3 zero padding bits. The file is secret material in its entirety (the
embedded image hash is needed to invert the hash-XOR rounds).
"""

from dataclasses import dataclass

from .primitives import sha512

MASTER_KEY_SIZE = 64
DIGEST_SIZE = 64
KEY_FILE_VERSION = 0x01
KEY_FILE_SIZE = 130
DECRYPTION_KEY_BITS = 1029


class WrongLength(ValueError):
    """Blob or field does not have its fixed size."""


class UnknownVersion(ValueError):
    """Key file carries an unrecognized version tag."""


class NonzeroPadding(ValueError):
    """The 3 trailing pad bits are not zero; the blob is corrupt."""


@dataclass(frozen=True)
class DerivedSeeds:
    """All chaotic seeds and the phase-2 key, from one master key."""

    x0: float
    x1: float
    x2: float
    phase2_key: bytes
    x_aes: float


def derive_seeds(master: bytes) -> DerivedSeeds:
    """Hash the master key and slice the digest into seeds.

    Digest bits are numbered MSB-first: bit 1 is the most significant bit
    of digest byte 0. Bits 1..128 -> x0, 129..256 -> x1, 257..384 -> x2,
    385..512 -> phase-2 AES key; x_aes is the phase-2 key over 2^128.
    """
    if len(master) != MASTER_KEY_SIZE:
        raise WrongLength(f"master key must be {MASTER_KEY_SIZE} bytes")
    digest = sha512(master)
    x0 = int.from_bytes(digest[0:16], "big") / 2**128
    x1 = int.from_bytes(digest[16:32], "big") / 2**128
    x2 = int.from_bytes(digest[32:48], "big") / 2**128
    phase2_key = digest[48:64]
    x_aes = int.from_bytes(phase2_key, "big") / 2**128
    return DerivedSeeds(x0, x1, x2, phase2_key, x_aes)


def pack_decryption_key(
    master: bytes, image_hash: bytes, aes_flag: int, xor_count: int
) -> bytes:
    """Serialize the 1029-bit decryption key into the 130-byte file format."""
    if len(master) != MASTER_KEY_SIZE:
        raise WrongLength(f"master key must be {MASTER_KEY_SIZE} bytes")
    if len(image_hash) != DIGEST_SIZE:
        raise WrongLength(f"image hash must be {DIGEST_SIZE} bytes")
    if aes_flag not in (0, 1):
        raise ValueError("aes_flag must be 0 or 1")
    if not 0 <= xor_count <= 15:
        raise ValueError("xor_count must be in 0..15")
    tail = (aes_flag << 7) | (xor_count << 3)
    return bytes([KEY_FILE_VERSION]) + master + image_hash + bytes([tail])


def unpack_decryption_key(blob: bytes) -> tuple[bytes, bytes, int, int]:
    """Exact inverse of pack_decryption_key; validates every field."""
    if len(blob) != KEY_FILE_SIZE:
        raise WrongLength(f"key file must be {KEY_FILE_SIZE} bytes, got {len(blob)}")
    if blob[0] != KEY_FILE_VERSION:
        raise UnknownVersion(f"unknown key-file version tag 0x{blob[0]:02x}")
    tail = blob[129]
    if tail & 0b111:
        raise NonzeroPadding("trailing pad bits are not zero")
    master = blob[1:65]
    image_hash = blob[65:129]
    aes_flag = tail >> 7
    xor_count = (tail >> 3) & 0x0F
    return master, image_hash, aes_flag, xor_count


def key_space_bits() -> int:
    """Effective key-space size in bits: 2^1029 x 10^14 ~ 2^1075."""
    return 1075
