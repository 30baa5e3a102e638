"""Tent-map source: iteration, quantization, permutations, determinism."""

from fractions import Fraction

import numpy as np
import pytest

from acfz import chaos
from acfz.chaos import TentMapState


def py_step(x, mu):
    """Independent scalar reference for the map iteration."""
    return mu * x if x < 0.5 else mu * (1.0 - x)


class TestStep:
    def test_lower_branch(self):
        s = chaos.step(TentMapState(0.4, 1.9))
        assert s.x == pytest.approx(0.76)

    def test_upper_branch(self):
        s = chaos.step(TentMapState(0.76, 1.9))
        assert s.x == pytest.approx(0.456)

    def test_boundary_uses_upper_branch(self):
        s = chaos.step(TentMapState(0.5, 1.9))
        assert s.x == pytest.approx(0.95)

    def test_mu_immutable_and_steps_count(self):
        s = TentMapState(0.4, 1.9)
        for i in range(5):
            s = chaos.step(s)
            assert s.mu == 1.9
            assert s.steps == i + 1

    def test_composition_is_exact(self):
        # 2k single steps == k steps applied to the k-step state.
        s = TentMapState(0.37, 1.9999)
        a = s
        for _ in range(200):
            a = chaos.step(a)
        b = s
        for _ in range(100):
            b = chaos.step(b)
        for _ in range(100):
            b = chaos.step(b)
        assert a == b

    def test_invalid_mu_rejected(self):
        with pytest.raises(ValueError):
            TentMapState(0.4, 0.0)
        with pytest.raises(ValueError):
            TentMapState(0.4, 2.5)

    def test_out_of_range_seed_guarded(self):
        s = TentMapState(0.0)
        assert 0.0 < s.x < 1.0
        s = TentMapState(1.5)
        assert 0.0 < s.x < 1.0
        # Guard value is deterministic in the step count.
        assert TentMapState(0.0, steps=3).x == TentMapState(-2.0, steps=3).x


class TestQuantize:
    def test_half_maps_to_zero(self):
        # 0.5 * 1e14 = 5 * 10^13, divisible by 2^8.
        assert chaos.quantize_index(0.5, 256) == 0

    def test_exact_decimal_oracle(self):
        # floor over the exact decimal value of the literal.
        exact = int(Fraction("0.12345678901") * 10**14)
        assert exact == 12345678901000
        assert exact % 256 == 8
        assert chaos.quantize_index(0.12345678901, 256) == 8

    def test_modulus_one(self):
        for x in (0.1, 0.5, 0.987654321):
            assert chaos.quantize_index(x, 1) == 0


class TestKeystream:
    def test_deterministic(self):
        a, _ = chaos.keystream_bytes(TentMapState(0.4), 64)
        b, _ = chaos.keystream_bytes(TentMapState(0.4), 64)
        assert a == b

    def test_continuation_matches_single_stream(self):
        whole, _ = chaos.keystream_bytes(TentMapState(0.4), 100)
        first, s = chaos.keystream_bytes(TentMapState(0.4), 60)
        second, _ = chaos.keystream_bytes(s, 40)
        assert first + second == whole

    def test_bytes_match_scalar_reference(self):
        x = 0.37
        expected = bytearray()
        for _ in range(50):
            x = py_step(x, 1.9)
            expected.append(int(x * 1e14) % 256)
        got, _ = chaos.keystream_bytes(TentMapState(0.37, 1.9), 50, burn_in=0)
        assert got == bytes(expected)

    def test_burn_in_advances_state(self):
        _, s = chaos.keystream_bytes(TentMapState(0.4), 10, burn_in=1000)
        assert s.steps == 1010

    def test_sensitivity_to_seed_perturbation(self):
        a, _ = chaos.keystream_bytes(TentMapState(0.37, 1.9), 1000)
        b, _ = chaos.keystream_bytes(TentMapState(0.37 + 2**-40, 1.9), 1000)
        differing = sum(1 for u, v in zip(a, b) if u != v)
        assert differing >= 900

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            chaos.keystream_bytes(TentMapState(0.4), 0)


class TestSortIndexPermutation:
    def test_single_element(self):
        perm, _ = chaos.sort_index_permutation(TentMapState(0.4), 1)
        assert list(perm) == [0]

    def test_known_orbit_argsort(self):
        # Orbit of 0.4 under mu=1.9: 0.76, 0.456, 0.8664, 0.25384.
        perm, _ = chaos.sort_index_permutation(TentMapState(0.4, 1.9), 4, burn_in=0)
        assert list(perm) == [3, 1, 0, 2]

    def test_matches_brute_force_oracle(self):
        x, mu = 0.612, 1.9999
        vals = []
        for _ in range(1000):
            x = py_step(x, mu)
        for _ in range(257):
            x = py_step(x, mu)
            vals.append(x)
        expected = np.argsort(np.asarray(vals), kind="stable")
        perm, _ = chaos.sort_index_permutation(TentMapState(0.612, mu), 257)
        assert np.array_equal(perm, expected)

    @pytest.mark.parametrize("n", [1, 2, 3, 7, 64, 255, 1024, 4096])
    def test_is_permutation(self, n):
        perm, _ = chaos.sort_index_permutation(TentMapState(0.5123), n)
        assert np.array_equal(np.sort(perm), np.arange(n))

    def test_random_seeds_give_permutations(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            n = int(rng.integers(1, 4097))
            seed = float(rng.uniform(1e-6, 1 - 1e-6))
            perm, _ = chaos.sort_index_permutation(TentMapState(seed), n)
            assert np.array_equal(np.sort(perm), np.arange(n))


class TestIndexDraw:
    def test_modulus_one_always_zero(self):
        for seed in (0.1, 0.45, 0.99):
            v, _ = chaos.index_draw(TentMapState(seed), 1)
            assert v == 0

    def test_first_draw_is_quantized_first_iterate(self):
        v, s = chaos.index_draw(TentMapState(0.4, 1.9), 256, burn_in=0)
        assert v == chaos.quantize_index(py_step(0.4, 1.9), 256)
        assert s.steps == 1

    def test_consistent_with_keystream(self):
        # A chain of byte draws equals the keystream.
        ks, _ = chaos.keystream_bytes(TentMapState(0.4), 16)
        s = TentMapState(0.4)
        drawn = []
        for _ in range(16):
            v, s = chaos.index_draw(s, 256)
            drawn.append(v)
        assert bytes(drawn) == ks

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            chaos.index_draw(TentMapState(0.4), 0)
