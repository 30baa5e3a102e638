"""Bit-exact SHA-512 and single-block AES-128.

SHA-512 is bound to the platform's vetted ``hashlib`` implementation.
AES-128 is implemented here (the standard library has no block cipher):
table-driven, 10 rounds, no mode of operation — block chaining in this
project is custom and lives elsewhere. Both primitives are gated by the
published standard test vectors in the test suite.
"""

import hashlib

BLOCK_SIZE = 16
KEY_SIZE = 16

_SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76"
    "ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d83115"
    "04c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f84"
    "53d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa8"
    "51a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d1973"
    "60814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479"
    "e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a"
    "703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df"
    "8ca1890dbfe6426841992d0fb054bb16"
)

_INV_SBOX = bytearray(256)
for _i, _v in enumerate(_SBOX):
    _INV_SBOX[_v] = _i
_INV_SBOX = bytes(_INV_SBOX)

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def _gmul(a: int, b: int) -> int:
    # GF(2^8) product, reduction polynomial x^8+x^4+x^3+x+1.
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        hi = a & 0x80
        a = (a << 1) & 0xFF
        if hi:
            a ^= 0x1B
        b >>= 1
    return p


_XT = bytes(_gmul(2, i) for i in range(256))
_M9 = bytes(_gmul(9, i) for i in range(256))
_M11 = bytes(_gmul(11, i) for i in range(256))
_M13 = bytes(_gmul(13, i) for i in range(256))
_M14 = bytes(_gmul(14, i) for i in range(256))

# Flat state layout: byte i sits at row i % 4, column i // 4 (FIPS order).
_SHIFT_IDX = tuple((i % 4) + 4 * ((i // 4 + i % 4) % 4) for i in range(16))
_INV_SHIFT_IDX = tuple((i % 4) + 4 * ((i // 4 - i % 4) % 4) for i in range(16))


def sha512(message: bytes) -> bytes:
    """FIPS 180-4 SHA-512 digest, 64 bytes."""
    return hashlib.sha512(message).digest()


def _expand_key(key: bytes) -> list[int]:
    w = list(key)
    for i in range(4, 44):
        t0, t1, t2, t3 = w[4 * i - 4 : 4 * i]
        if i % 4 == 0:
            t0, t1, t2, t3 = (
                _SBOX[t1] ^ _RCON[i // 4 - 1],
                _SBOX[t2],
                _SBOX[t3],
                _SBOX[t0],
            )
        base = 4 * (i - 4)
        w.append(w[base] ^ t0)
        w.append(w[base + 1] ^ t1)
        w.append(w[base + 2] ^ t2)
        w.append(w[base + 3] ^ t3)
    return w


def _check(block: bytes, key: bytes) -> None:
    if len(block) != BLOCK_SIZE:
        raise ValueError(f"block must be {BLOCK_SIZE} bytes, got {len(block)}")
    if len(key) != KEY_SIZE:
        raise ValueError(f"key must be {KEY_SIZE} bytes, got {len(key)}")


def aes128_encrypt_block(block: bytes, key: bytes) -> bytes:
    """FIPS 197 AES-128 encryption of one 16-byte block."""
    _check(block, key)
    w = _expand_key(key)
    s = [block[i] ^ w[i] for i in range(16)]
    sbox, xt, shift = _SBOX, _XT, _SHIFT_IDX
    for rnd in range(1, 11):
        s = [sbox[s[j]] for j in shift]
        if rnd < 10:
            for c in (0, 4, 8, 12):
                a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
                t = a0 ^ a1 ^ a2 ^ a3
                s[c] = a0 ^ t ^ xt[a0 ^ a1]
                s[c + 1] = a1 ^ t ^ xt[a1 ^ a2]
                s[c + 2] = a2 ^ t ^ xt[a2 ^ a3]
                s[c + 3] = a3 ^ t ^ xt[a3 ^ a0]
        base = 16 * rnd
        s = [s[i] ^ w[base + i] for i in range(16)]
    return bytes(s)


def aes128_decrypt_block(block: bytes, key: bytes) -> bytes:
    """Inverse of aes128_encrypt_block under the same key."""
    _check(block, key)
    w = _expand_key(key)
    isbox, ishift = _INV_SBOX, _INV_SHIFT_IDX
    m9, m11, m13, m14 = _M9, _M11, _M13, _M14
    s = [block[i] ^ w[160 + i] for i in range(16)]
    for rnd in range(9, -1, -1):
        s = [isbox[s[j]] for j in ishift]
        base = 16 * rnd
        s = [s[i] ^ w[base + i] for i in range(16)]
        if rnd > 0:
            for c in (0, 4, 8, 12):
                a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
                s[c] = m14[a0] ^ m11[a1] ^ m13[a2] ^ m9[a3]
                s[c + 1] = m9[a0] ^ m14[a1] ^ m11[a2] ^ m13[a3]
                s[c + 2] = m13[a0] ^ m9[a1] ^ m14[a2] ^ m11[a3]
                s[c + 3] = m11[a0] ^ m13[a1] ^ m9[a2] ^ m14[a3]
    return bytes(s)
