"""PGM/PNG loading, PGM storing, and the cipher container codec."""

import numpy as np
import pytest
from PIL import Image

from acfz import imgio


class TestPgm:
    def test_known_2x2_file(self, tmp_path):
        path = tmp_path / "t.pgm"
        path.write_bytes(b"P5\n2 2\n255\n" + bytes([0, 64, 128, 255]))
        img = imgio.load_gray(str(path))
        assert img.shape == (2, 2)
        assert img.tolist() == [[0, 64], [128, 255]]

    def test_store_header_format(self, tmp_path):
        path = tmp_path / "t.pgm"
        imgio.store_gray(np.zeros((256, 256), dtype=np.uint8), str(path))
        assert path.read_bytes().startswith(b"P5\n256 256\n255\n")

    def test_roundtrip(self, tmp_path):
        rng = np.random.default_rng(50)
        img = rng.integers(0, 256, (37, 23), dtype=np.uint8)
        path = tmp_path / "r.pgm"
        imgio.store_gray(img, str(path))
        assert np.array_equal(imgio.load_gray(str(path)), img)

    def test_byte_stable_output(self, tmp_path):
        rng = np.random.default_rng(51)
        img = rng.integers(0, 256, (5, 9), dtype=np.uint8)
        p1, p2 = tmp_path / "a.pgm", tmp_path / "b.pgm"
        imgio.store_gray(img, str(p1))
        imgio.store_gray(img, str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_comments_in_header(self, tmp_path):
        path = tmp_path / "c.pgm"
        path.write_bytes(b"P5\n# made by hand\n2 2\n# another\n255\n" + bytes(4))
        assert imgio.load_gray(str(path)).shape == (2, 2)

    def test_color_ppm_rejected(self, tmp_path):
        path = tmp_path / "c.ppm"
        path.write_bytes(b"P6\n2 2\n255\n" + bytes(12))
        with pytest.raises(imgio.UnsupportedFormat):
            imgio.load_gray(str(path))

    def test_maxval_not_255(self, tmp_path):
        path = tmp_path / "m.pgm"
        path.write_bytes(b"P5\n2 2\n65535\n" + bytes(8))
        with pytest.raises(imgio.MaxvalNot255):
            imgio.load_gray(str(path))

    def test_truncated_pixels(self, tmp_path):
        path = tmp_path / "t.pgm"
        path.write_bytes(b"P5\n4 4\n255\n" + bytes(7))
        with pytest.raises(imgio.CorruptHeader):
            imgio.load_gray(str(path))

    def test_garbage_rejected(self, tmp_path):
        path = tmp_path / "g.bin"
        path.write_bytes(b"\x00\x01\x02\x03mystery")
        with pytest.raises(imgio.UnsupportedFormat):
            imgio.load_gray(str(path))


class TestPng:
    def test_grayscale_png(self, tmp_path):
        rng = np.random.default_rng(52)
        img = rng.integers(0, 256, (21, 34), dtype=np.uint8)
        path = tmp_path / "g.png"
        Image.fromarray(img, mode="L").save(str(path))
        assert np.array_equal(imgio.load_gray(str(path)), img)

    def test_color_png_rejected(self, tmp_path):
        rgb = np.zeros((8, 8, 3), dtype=np.uint8)
        path = tmp_path / "c.png"
        Image.fromarray(rgb, mode="RGB").save(str(path))
        with pytest.raises(imgio.UnsupportedFormat):
            imgio.load_gray(str(path))


class TestContainer:
    def test_roundtrip(self, tmp_path):
        payload = bytes(range(256)) * 16  # 4096 bytes
        path = tmp_path / "c.acfz"
        imgio.store_cipher(payload, 64, 64, str(path))
        got, width, height = imgio.load_cipher(str(path))
        assert (got, width, height) == (payload, 64, 64)

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "c.acfz"
        imgio.store_cipher(bytes(64), 2, 2, str(path))
        blob = bytearray(path.read_bytes())
        blob[0] ^= 0xFF
        path.write_bytes(bytes(blob))
        with pytest.raises(imgio.BadMagic):
            imgio.load_cipher(str(path))

    def test_unknown_version(self, tmp_path):
        path = tmp_path / "c.acfz"
        imgio.store_cipher(bytes(64), 2, 2, str(path))
        blob = bytearray(path.read_bytes())
        blob[4] = 0x09
        path.write_bytes(bytes(blob))
        with pytest.raises(imgio.UnknownVersion):
            imgio.load_cipher(str(path))

    def test_declared_length_mismatch(self, tmp_path):
        path = tmp_path / "c.acfz"
        imgio.store_cipher(bytes(128), 2, 2, str(path))
        path.write_bytes(path.read_bytes()[:-1])
        with pytest.raises(imgio.LengthMismatch):
            imgio.load_cipher(str(path))

    def test_invalid_padded_len_rejected_on_store(self, tmp_path):
        with pytest.raises(imgio.LengthMismatch):
            imgio.store_cipher(bytes(63), 2, 2, str(tmp_path / "x"))
        with pytest.raises(imgio.LengthMismatch):
            imgio.store_cipher(bytes(64), 64, 64, str(tmp_path / "y"))

    def test_truncated_header(self, tmp_path):
        path = tmp_path / "h.acfz"
        path.write_bytes(b"ACFZ\x01\x00")
        with pytest.raises(imgio.CorruptHeader):
            imgio.load_cipher(str(path))
