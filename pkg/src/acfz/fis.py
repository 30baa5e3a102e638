"""Mamdani fuzzy inference: fuzzify, fire rules, aggregate, defuzzify.

Classical operator set: AND is min, implication clips the consequent set
at the rule's firing strength, aggregation is pointwise max, and the
crisp output is the centroid of the aggregate over a uniform grid on the
output range. Two built-in configurations gate the second encryption
phase: a static-diversity score from entropy and the requested security
level, and a dynamic-diversity score from the differential metrics.

Configurations are immutable after construction and evaluation is pure;
a module-level counter only records how many evaluations ran, so tests
can assert that decryption never consults the inference engine.
"""

from dataclasses import dataclass
from math import exp

import numpy as np

DEFAULT_GRID = 1001
# Two-term coverage: Low/High Gaussians sit on the range endpoints with
# this fraction of the range as sigma (membership ~0.06 at the midpoint).
SIGMA_FRACTION = 0.2125
# The differential metrics saturate far below their numeric range (an
# ideal cipher pair reads UACI ~33.5, NPCR ~99.6), so their Low terms are
# narrower; otherwise mid-scale UACI still counts as Low and the round
# loop never accepts a fully diffused pair.
NARROW_SIGMA_FRACTION = 0.10


class ParseError(ValueError):
    """Configuration document does not match the grammar."""


class ValidationError(ValueError):
    """Configuration is well-formed but semantically invalid."""


class UnknownVariable(KeyError):
    """An input name is missing from, or absent in, the configuration."""


_eval_count = 0


def evaluation_count() -> int:
    """Number of evaluate() calls since the last reset (diagnostics)."""
    return _eval_count


def reset_evaluation_count() -> None:
    global _eval_count
    _eval_count = 0


@dataclass(frozen=True)
class GaussianMF:
    center: float
    sigma: float


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    lo: float
    hi: float
    terms: dict[str, GaussianMF]


@dataclass(frozen=True)
class FuzzyRule:
    """IF (var IS term) AND ... THEN output IS term."""

    antecedents: tuple[tuple[str, str], ...]
    consequent: tuple[str, str]


@dataclass(frozen=True)
class FisConfig:
    inputs: tuple[LinguisticVariable, ...]
    output: LinguisticVariable
    rules: tuple[FuzzyRule, ...]
    defuzz_grid: int = DEFAULT_GRID

    def __post_init__(self):
        validate(self)

    def input_named(self, name: str) -> LinguisticVariable:
        for var in self.inputs:
            if var.name == name:
                return var
        raise UnknownVariable(name)


def validate(config: FisConfig) -> None:
    """Raise ValidationError on any broken invariant."""
    if not config.rules:
        raise ValidationError("at least one rule is required")
    if config.defuzz_grid < 101:
        raise ValidationError("defuzz_grid must be >= 101")
    seen = set()
    for var in (*config.inputs, config.output):
        if var.name in seen:
            raise ValidationError(f"duplicate variable name {var.name!r}")
        seen.add(var.name)
        if not var.lo < var.hi:
            raise ValidationError(f"{var.name}: range lo must be < hi")
        if not var.terms:
            raise ValidationError(f"{var.name}: at least one term is required")
        for label, mf in var.terms.items():
            if mf.sigma <= 0:
                raise ValidationError(f"{var.name}.{label}: sigma must be > 0")
    by_name = {var.name: var for var in config.inputs}
    for rule in config.rules:
        for vname, term in rule.antecedents:
            if vname not in by_name:
                raise ValidationError(f"rule references unknown input {vname!r}")
            if term not in by_name[vname].terms:
                raise ValidationError(f"rule references unknown term {vname}.{term}")
        cvar, cterm = rule.consequent
        if cvar != config.output.name:
            raise ValidationError(f"consequent variable must be {config.output.name!r}")
        if cterm not in config.output.terms:
            raise ValidationError(f"rule references unknown term {cvar}.{cterm}")


def membership(mf: GaussianMF, x: float) -> float:
    """Gaussian membership exp(-(x-center)^2 / (2 sigma^2))."""
    d = x - mf.center
    return exp(-(d * d) / (2.0 * mf.sigma * mf.sigma))


def firing_strengths(config: FisConfig, values: dict[str, float]) -> list[float]:
    """Per-rule firing strength: min over antecedent memberships.

    Inputs are clamped to their variable ranges first; unknown or missing
    input names raise UnknownVariable.
    """
    known = {var.name for var in config.inputs}
    for name in values:
        if name not in known:
            raise UnknownVariable(name)
    clamped = {}
    for var in config.inputs:
        if var.name not in values:
            raise UnknownVariable(f"missing value for input {var.name!r}")
        clamped[var.name] = min(max(values[var.name], var.lo), var.hi)
    strengths = []
    for rule in config.rules:
        s = 1.0
        for vname, term in rule.antecedents:
            m = membership(config.input_named(vname).terms[term], clamped[vname])
            if m < s:
                s = m
        strengths.append(s)
    return strengths


def evaluate(config: FisConfig, values: dict[str, float]) -> float:
    """Crisp Mamdani output for the given input values.

    Each rule clips its consequent membership function at the firing
    strength; the clipped sets are max-aggregated over a uniform grid and
    the centroid is returned. If every rule is silent the midpoint of the
    output range is returned instead.
    """
    global _eval_count
    _eval_count += 1
    strengths = firing_strengths(config, values)
    out = config.output
    midpoint = 0.5 * (out.lo + out.hi)
    if max(strengths) == 0.0:
        return midpoint
    grid = np.linspace(out.lo, out.hi, config.defuzz_grid)
    agg = np.zeros_like(grid)
    for rule, s in zip(config.rules, strengths):
        mf = out.terms[rule.consequent[1]]
        clipped = np.minimum(
            np.exp(-((grid - mf.center) ** 2) / (2.0 * mf.sigma**2)), s
        )
        np.maximum(agg, clipped, out=agg)
    den = float(agg.sum())
    if den == 0.0:
        return midpoint
    return float((grid * agg).sum() / den)


def _two_term_variable(
    name: str, lo: float, hi: float, low_sigma_fraction: float = SIGMA_FRACTION
) -> LinguisticVariable:
    sigma = (hi - lo) * SIGMA_FRACTION
    return LinguisticVariable(
        name, lo, hi,
        {
            "Low": GaussianMF(lo, (hi - lo) * low_sigma_fraction),
            "High": GaussianMF(hi, sigma),
        },
    )


def fis1_default() -> FisConfig:
    """Static-diversity gate: entropy and SEC in, S-Dive in [0, 1] out."""
    return FisConfig(
        inputs=(
            _two_term_variable("Entropy", 0.0, 8.0),
            _two_term_variable("SEC", 0.0, 100.0),
        ),
        output=_two_term_variable("S-Dive", 0.0, 1.0),
        rules=(
            FuzzyRule((("Entropy", "Low"), ("SEC", "High")), ("S-Dive", "Low")),
            FuzzyRule((("Entropy", "High"),), ("S-Dive", "High")),
        ),
    )


def fis2_default() -> FisConfig:
    """Dynamic-diversity gate: UACI, NPCR and SEC in, D-Dive in [0, 1] out."""
    return FisConfig(
        inputs=(
            _two_term_variable("UACI", 0.0, 100.0, NARROW_SIGMA_FRACTION),
            _two_term_variable("NPCR", 0.0, 100.0, NARROW_SIGMA_FRACTION),
            _two_term_variable("SEC", 0.0, 100.0),
        ),
        output=_two_term_variable("D-Dive", 0.0, 1.0),
        rules=(
            FuzzyRule((("UACI", "Low"), ("SEC", "High")), ("D-Dive", "Low")),
            FuzzyRule((("NPCR", "Low"), ("SEC", "High")), ("D-Dive", "Low")),
            FuzzyRule((("UACI", "High"), ("NPCR", "High")), ("D-Dive", "High")),
        ),
    )


# --------------------------------------------------------------------------
# Configuration file format. Line-oriented, whitespace-insensitive,
# '#' starts a comment. Example:
#
#   [input Entropy]
#   range = 0 8
#   term Low = 0 1.7
#   term High = 8 1.7
#
#   [output S-Dive]
#   range = 0 1
#   term Low = 0 0.2125
#   term High = 1 0.2125
#
#   [rules]
#   grid = 1001
#   IF Entropy IS Low AND SEC IS High THEN S-Dive IS Low
#
# Keywords (IF/IS/AND/THEN, section kinds, range/term/grid) are
# case-insensitive; variable and term names are case-sensitive.
# --------------------------------------------------------------------------


def _parse_floats(text: str, n: int, where: str) -> list[float]:
    parts = text.replace(",", " ").split()
    if len(parts) != n:
        raise ParseError(f"{where}: expected {n} numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from None


def _parse_rule(line: str, lineno: int) -> FuzzyRule:
    tokens = line.split()
    lowered = [t.lower() for t in tokens]
    if not lowered or lowered[0] != "if":
        raise ParseError(f"line {lineno}: rule must start with IF")
    try:
        then_at = lowered.index("then")
    except ValueError:
        raise ParseError(f"line {lineno}: rule is missing THEN") from None
    antecedents = []
    pos = 1
    while pos < then_at:
        if pos + 2 >= then_at or lowered[pos + 1] != "is":
            raise ParseError(f"line {lineno}: expected '<var> IS <term>'")
        antecedents.append((tokens[pos], tokens[pos + 2]))
        pos += 3
        if pos < then_at:
            if lowered[pos] != "and":
                raise ParseError(f"line {lineno}: expected AND between antecedents")
            pos += 1
    tail = tokens[then_at + 1 :]
    if len(tail) != 3 or tail[1].lower() != "is":
        raise ParseError(f"line {lineno}: expected 'THEN <var> IS <term>'")
    if not antecedents:
        raise ParseError(f"line {lineno}: rule needs at least one antecedent")
    return FuzzyRule(tuple(antecedents), (tail[0], tail[2]))


def load_fis_config(text: str) -> FisConfig:
    """Parse and validate a configuration document."""
    inputs: list[LinguisticVariable] = []
    output: LinguisticVariable | None = None
    rules: list[FuzzyRule] = []
    grid = DEFAULT_GRID

    section = None  # ("input"|"output", name) or "rules"
    pending: dict | None = None

    def close_variable():
        nonlocal pending, output
        if pending is None:
            return
        if pending["range"] is None:
            raise ParseError(f"variable {pending['name']!r} has no range")
        var = LinguisticVariable(
            pending["name"], pending["range"][0], pending["range"][1],
            pending["terms"],
        )
        if pending["kind"] == "input":
            inputs.append(var)
        else:
            if output is not None:
                raise ParseError("more than one output variable")
            output = var
        pending = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"line {lineno}: unterminated section header")
            close_variable()
            head = line[1:-1].split()
            if len(head) == 1 and head[0].lower() == "rules":
                section = "rules"
            elif len(head) == 2 and head[0].lower() in ("input", "output"):
                section = "variable"
                pending = {
                    "kind": head[0].lower(),
                    "name": head[1],
                    "range": None,
                    "terms": {},
                }
            else:
                raise ParseError(f"line {lineno}: bad section header {line!r}")
            continue
        if section == "variable":
            if "=" not in line:
                raise ParseError(f"line {lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key_parts = key.split()
            if key.lower() == "range":
                pending["range"] = _parse_floats(value, 2, f"line {lineno}")
            elif len(key_parts) == 2 and key_parts[0].lower() == "term":
                center, sigma = _parse_floats(value, 2, f"line {lineno}")
                pending["terms"][key_parts[1]] = GaussianMF(center, sigma)
            else:
                raise ParseError(f"line {lineno}: unknown key {key!r}")
        elif section == "rules":
            if "=" in line and line.split("=", 1)[0].strip().lower() == "grid":
                grid = int(_parse_floats(line.split("=", 1)[1], 1, f"line {lineno}")[0])
            else:
                rules.append(_parse_rule(line, lineno))
        else:
            raise ParseError(f"line {lineno}: content outside any section")
    close_variable()

    if output is None:
        raise ParseError("no output variable defined")
    return FisConfig(tuple(inputs), output, tuple(rules), grid)


def dump_fis_config(config: FisConfig) -> str:
    """Serialize a configuration; load_fis_config parses it back equal."""
    lines = []
    for var, kind in [(v, "input") for v in config.inputs] + [(config.output, "output")]:
        lines.append(f"[{kind} {var.name}]")
        lines.append(f"range = {var.lo!r} {var.hi!r}")
        for label, mf in var.terms.items():
            lines.append(f"term {label} = {mf.center!r} {mf.sigma!r}")
        lines.append("")
    lines.append("[rules]")
    lines.append(f"grid = {config.defuzz_grid}")
    for rule in config.rules:
        ant = " AND ".join(f"{v} IS {t}" for v, t in rule.antecedents)
        cv, ct = rule.consequent
        lines.append(f"IF {ant} THEN {cv} IS {ct}")
    return "\n".join(lines) + "\n"
