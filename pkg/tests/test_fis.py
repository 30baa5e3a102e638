"""Mamdani engine: membership, inference, defaults, config codec."""

import math

import numpy as np
import pytest

from acfz import fis
from acfz.fis import (
    FisConfig,
    FuzzyRule,
    GaussianMF,
    LinguisticVariable,
    ParseError,
    UnknownVariable,
    ValidationError,
)


def dense_evaluate(config, values, grid=100001):
    """Dense-grid oracle: same engine, two orders of magnitude finer grid."""
    fine = FisConfig(config.inputs, config.output, config.rules, grid)
    return fis.evaluate(fine, values)


class TestMembership:
    def test_peak_at_center(self):
        assert fis.membership(GaussianMF(3.0, 0.5), 3.0) == 1.0

    def test_one_sigma(self):
        m = fis.membership(GaussianMF(3.0, 0.5), 3.5)
        assert m == pytest.approx(math.exp(-0.5))

    def test_symmetry(self):
        mf = GaussianMF(0.4, 0.17)
        for d in (0.05, 0.2, 1.3):
            assert fis.membership(mf, 0.4 - d) == pytest.approx(
                fis.membership(mf, 0.4 + d)
            )


def single_rule_config(center=0.4, sigma=0.05, grid=1001):
    v_in = LinguisticVariable("X", 0.0, 1.0, {"Mid": GaussianMF(0.5, 0.2)})
    v_out = LinguisticVariable("Y", 0.0, 1.0, {"Peak": GaussianMF(center, sigma)})
    return FisConfig(
        (v_in,), v_out, (FuzzyRule((("X", "Mid"),), ("Y", "Peak")),), grid
    )


class TestEvaluate:
    def test_single_rule_centroid_equals_center(self):
        config = single_rule_config()
        # Firing strength 1: input exactly at the antecedent center.
        assert fis.evaluate(config, {"X": 0.5}) == pytest.approx(0.4, abs=1e-2)

    def test_output_within_range(self):
        rng = np.random.default_rng(10)
        for config in (fis.fis1_default(), fis.fis2_default()):
            for _ in range(50):
                values = {
                    var.name: float(rng.uniform(var.lo - 10, var.hi + 10))
                    for var in config.inputs
                }
                out = fis.evaluate(config, values)
                assert config.output.lo <= out <= config.output.hi

    def test_all_rules_silent_returns_midpoint(self):
        # Sigma small enough that the membership underflows to exactly 0.
        v_in = LinguisticVariable("X", 0.0, 1.0, {"Zero": GaussianMF(0.0, 1e-3)})
        v_out = LinguisticVariable("Y", 0.0, 1.0, {"T": GaussianMF(1.0, 0.1)})
        config = FisConfig(
            (v_in,), v_out, (FuzzyRule((("X", "Zero"),), ("Y", "T")),)
        )
        assert fis.membership(v_in.terms["Zero"], 1.0) == 0.0
        assert fis.evaluate(config, {"X": 1.0}) == 0.5

    def test_unknown_and_missing_inputs(self):
        config = fis.fis1_default()
        with pytest.raises(UnknownVariable):
            fis.evaluate(config, {"Entropy": 1.0, "SEC": 5.0, "Bogus": 1.0})
        with pytest.raises(UnknownVariable):
            fis.evaluate(config, {"Entropy": 1.0})

    def test_clamping_out_of_range_inputs(self):
        config = fis.fis1_default()
        assert fis.evaluate(config, {"Entropy": 8.3, "SEC": 50.0}) == fis.evaluate(
            config, {"Entropy": 8.0, "SEC": 50.0}
        )

    def test_deterministic(self):
        config = fis.fis2_default()
        values = {"UACI": 12.0, "NPCR": 73.0, "SEC": 41.0}
        assert fis.evaluate(config, values) == fis.evaluate(config, values)

    def test_evaluation_counter(self):
        fis.reset_evaluation_count()
        fis.evaluate(fis.fis1_default(), {"Entropy": 2.0, "SEC": 10.0})
        fis.evaluate(fis.fis1_default(), {"Entropy": 2.0, "SEC": 10.0})
        assert fis.evaluation_count() == 2


class TestDefaults:
    def test_fis1_structure(self):
        config = fis.fis1_default()
        names = [v.name for v in config.inputs]
        assert names == ["Entropy", "SEC"]
        assert (config.inputs[0].lo, config.inputs[0].hi) == (0.0, 8.0)
        assert (config.inputs[1].lo, config.inputs[1].hi) == (0.0, 100.0)
        assert config.output.name == "S-Dive"
        assert (config.output.lo, config.output.hi) == (0.0, 1.0)
        assert config.rules == (
            FuzzyRule((("Entropy", "Low"), ("SEC", "High")), ("S-Dive", "Low")),
            FuzzyRule((("Entropy", "High"),), ("S-Dive", "High")),
        )

    def test_fis2_structure(self):
        config = fis.fis2_default()
        names = [v.name for v in config.inputs]
        assert names == ["UACI", "NPCR", "SEC"]
        for var in config.inputs:
            assert (var.lo, var.hi) == (0.0, 100.0)
        assert config.output.name == "D-Dive"
        assert config.rules[2] == FuzzyRule(
            (("UACI", "High"), ("NPCR", "High")), ("D-Dive", "High")
        )

    def test_fis1_high_entropy_gives_high_sdive(self):
        got = fis.evaluate(fis.fis1_default(), {"Entropy": 8.0, "SEC": 50.0})
        oracle = dense_evaluate(fis.fis1_default(), {"Entropy": 8.0, "SEC": 50.0})
        assert got >= 0.7
        assert oracle >= 0.7
        assert got == pytest.approx(oracle, abs=1e-3)

    def test_fis2_no_diversity_gives_low_ddive(self):
        values = {"UACI": 0.0, "NPCR": 0.0, "SEC": 100.0}
        got = fis.evaluate(fis.fis2_default(), values)
        oracle = dense_evaluate(fis.fis2_default(), values)
        assert got <= 0.35
        assert oracle <= 0.35
        assert got == pytest.approx(oracle, abs=1e-3)

    def test_monotone_at_extremes(self):
        config = fis.fis1_default()
        for sec in (50.0, 75.0, 100.0):
            high = fis.evaluate(config, {"Entropy": 8.0, "SEC": sec})
            low = fis.evaluate(config, {"Entropy": 0.0, "SEC": sec})
            assert high > low

    def test_grid_refinement_convergence(self):
        rng = np.random.default_rng(11)
        for config in (fis.fis1_default(), fis.fis2_default()):
            for _ in range(100):
                values = {
                    var.name: float(rng.uniform(var.lo, var.hi))
                    for var in config.inputs
                }
                coarse = fis.evaluate(config, values)
                fine = dense_evaluate(config, values)
                assert abs(coarse - fine) <= 1e-3


class TestConfigCodec:
    def test_defaults_roundtrip(self):
        for config in (fis.fis1_default(), fis.fis2_default()):
            assert fis.load_fis_config(fis.dump_fis_config(config)) == config

    def test_parse_minimal_document(self):
        text = """
        # a comment
        [input X]
        range = 0 10
        term Low = 0 2
        term High = 10 2

        [output Y]
        range = 0 1
        term Low = 0 0.2
        term High = 1 0.2

        [rules]
        grid = 501
        if X is Low then Y is Low
        IF X IS High THEN Y IS High
        """
        config = fis.load_fis_config(text)
        assert config.defuzz_grid == 501
        assert len(config.rules) == 2
        assert config.inputs[0].terms["High"].center == 10.0

    def test_dangling_term_rejected(self):
        config = fis.fis1_default()
        text = fis.dump_fis_config(config).replace(
            "THEN S-Dive IS Low", "THEN S-Dive IS Medium"
        )
        with pytest.raises(ValidationError):
            fis.load_fis_config(text)

    def test_zero_sigma_rejected(self):
        text = fis.dump_fis_config(fis.fis1_default()).replace(
            "term Low = 0.0 1.7", "term Low = 0.0 0"
        )
        with pytest.raises(ValidationError):
            fis.load_fis_config(text)

    def test_empty_rules_rejected(self):
        with pytest.raises(ValidationError):
            FisConfig(
                fis.fis1_default().inputs, fis.fis1_default().output, ()
            )

    def test_small_grid_rejected(self):
        with pytest.raises(ValidationError):
            FisConfig(
                fis.fis1_default().inputs,
                fis.fis1_default().output,
                fis.fis1_default().rules,
                100,
            )

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            fis.load_fis_config("[input X]\nbogus line\n")
        with pytest.raises(ParseError):
            fis.load_fis_config("stray content\n")
        with pytest.raises(ParseError):
            fis.load_fis_config("[rules]\nIF X IS THEN Y IS Low\n")
        with pytest.raises(ParseError):
            fis.load_fis_config("[input X]\nrange = 0 1\nterm A = 0 1\n")  # no output

    def test_rule_must_reference_known_input(self):
        text = """
        [input X]
        range = 0 1
        term Low = 0 0.2

        [output Y]
        range = 0 1
        term Low = 0 0.2

        [rules]
        IF Z IS Low THEN Y IS Low
        """
        with pytest.raises(ValidationError):
            fis.load_fis_config(text)
