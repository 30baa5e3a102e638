"""Grayscale image files and the cipher container format.

Images load from binary PGM (P5, maxval 255) or 8-bit grayscale PNG and
store as P5. Ciphertext travels in the ACFZ container:

    magic "ACFZ" | version 0x01 | width u32be | height u32be |
    padded_len u32be | payload (padded_len bytes)

padded_len is a multiple of 64 and at least width*height; the original
dimensions let the decryptor strip the phase-2 padding.
"""

import struct

import numpy as np
from PIL import Image, UnidentifiedImageError

CONTAINER_MAGIC = b"ACFZ"
CONTAINER_VERSION = 0x01
_HEADER = struct.Struct(">4sBIII")
_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class UnsupportedFormat(ValueError):
    """Not a binary PGM or an 8-bit grayscale PNG."""


class CorruptHeader(ValueError):
    """Image header is malformed or disagrees with the pixel data."""


class MaxvalNot255(ValueError):
    """PGM maxval other than 255; only 8-bit images are supported."""


class BadMagic(ValueError):
    """Container does not start with the ACFZ magic."""


class UnknownVersion(ValueError):
    """Container version tag is not recognized."""


class LengthMismatch(ValueError):
    """Container payload length disagrees with its header."""


def _parse_pgm(data: bytes) -> np.ndarray:
    # Header tokens separated by whitespace; '#' comments run to newline.
    pos = 2  # past "P5"
    fields = []
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise CorruptHeader("truncated PGM header")
        fields.append(data[start:pos])
    pos += 1  # single whitespace after maxval
    try:
        width, height, maxval = (int(f) for f in fields)
    except ValueError:
        raise CorruptHeader(f"non-numeric PGM header fields {fields!r}") from None
    if width < 1 or height < 1:
        raise CorruptHeader(f"bad PGM dimensions {width}x{height}")
    if maxval != 255:
        raise MaxvalNot255(f"PGM maxval must be 255, got {maxval}")
    pixels = data[pos : pos + width * height]
    if len(pixels) != width * height:
        raise CorruptHeader(
            f"PGM pixel data is {len(pixels)} bytes, expected {width * height}"
        )
    return np.frombuffer(pixels, dtype=np.uint8).reshape(height, width)


def _load_png(path: str) -> np.ndarray:
    try:
        with Image.open(path) as im:
            if im.mode != "L":
                raise UnsupportedFormat(
                    f"PNG must be 8-bit grayscale (mode L), got mode {im.mode}"
                )
            return np.asarray(im, dtype=np.uint8)
    except UnidentifiedImageError:
        raise CorruptHeader("unreadable PNG") from None


def load_gray(path: str) -> np.ndarray:
    """Load a grayscale image as a height x width uint8 array."""
    with open(path, "rb") as f:
        head = f.read(8)
        f.seek(0)
        data = f.read() if head[:2] == b"P5" else None
    if head[:2] == b"P5":
        return _parse_pgm(data)
    if head == _PNG_MAGIC:
        return _load_png(path)
    if head[:1] == b"P":
        raise UnsupportedFormat(
            f"PNM type {head[:2].decode('ascii', 'replace')} not supported; "
            "only binary grayscale P5"
        )
    raise UnsupportedFormat("unrecognized image format (want P5 PGM or grayscale PNG)")


def store_gray(img: np.ndarray, path: str) -> None:
    """Write a binary P5 PGM with maxval 255; output is byte-stable."""
    arr = np.asarray(img, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D image, got shape {arr.shape}")
    height, width = arr.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(arr.tobytes())


def store_cipher(payload: bytes, width: int, height: int, path: str) -> None:
    """Write the ACFZ container; payload is the padded ciphertext."""
    if len(payload) % 64 or len(payload) < width * height:
        raise LengthMismatch(
            f"payload of {len(payload)} bytes invalid for {width}x{height}"
        )
    with open(path, "wb") as f:
        f.write(
            _HEADER.pack(CONTAINER_MAGIC, CONTAINER_VERSION, width, height, len(payload))
        )
        f.write(payload)


def load_cipher(path: str) -> tuple[bytes, int, int]:
    """Read and validate a container; returns (payload, width, height)."""
    with open(path, "rb") as f:
        data = f.read()
    if len(data) < _HEADER.size:
        raise CorruptHeader("container shorter than its header")
    magic, version, width, height, padded_len = _HEADER.unpack_from(data)
    if magic != CONTAINER_MAGIC:
        raise BadMagic(f"bad container magic {magic!r}")
    if version != CONTAINER_VERSION:
        raise UnknownVersion(f"unknown container version 0x{version:02x}")
    if padded_len % 64 or padded_len < width * height:
        raise LengthMismatch(
            f"declared payload of {padded_len} bytes invalid for {width}x{height}"
        )
    payload = data[_HEADER.size :]
    if len(payload) != padded_len:
        raise LengthMismatch(
            f"container holds {len(payload)} payload bytes, header says {padded_len}"
        )
    return payload, width, height
