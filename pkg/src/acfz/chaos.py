"""Deterministic tent-map pseudo-random source.

Everything key-dependent in the cipher is driven from here: byte
keystreams, sort-index permutations, and bounded index draws, all derived
from iterating

    x' = mu * x        if x < 1/2
    x' = mu * (1 - x)  if x >= 1/2

in 64-bit floating point with a fixed evaluation order, so identical
seeds give bit-identical output on any platform.

Values are quantized to integers as floor(x * 10^14) mod m, computed as
``int(x * 1e14) % m`` (one float product, truncation); this is the
defining semantics, not an approximation of exact decimal arithmetic.

A fresh state is burned in (default 1000 discarded iterations) before an
operation emits its first output; a state that has already stepped
continues without re-warming, so split calls concatenate to one stream.
"""

from dataclasses import dataclass

import numpy as np

DEFAULT_MU = 1.9999
DEFAULT_BURN_IN = 1000

_SCALE = 1e14
# Fallback for floating-point escapes from (0,1); keyed to the step count
# so the stream stays total and deterministic.
_GUARD_BASE = 0.400000000000001
_GUARD_UNIT = 1e-15


def _guard_value(steps: int) -> float:
    return _GUARD_BASE + (steps % 7) * _GUARD_UNIT


@dataclass(frozen=True)
class TentMapState:
    """Immutable (x, mu) pair plus the number of steps taken so far.

    ``x`` must lie in the open interval (0, 1); out-of-range seeds are
    replaced by the same guard value a degenerate step would produce.
    ``mu`` must lie in (0, 2] and never changes over a state's lifetime.
    """

    x: float
    mu: float = DEFAULT_MU
    steps: int = 0

    def __post_init__(self):
        if not 0.0 < self.mu <= 2.0:
            raise ValueError(f"mu must be in (0, 2], got {self.mu}")
        if not 0.0 < self.x < 1.0:
            object.__setattr__(self, "x", _guard_value(self.steps))


def step(state: TentMapState) -> TentMapState:
    """Advance the map one iteration, guarding degenerate escapes."""
    x = state.mu * state.x if state.x < 0.5 else state.mu * (1.0 - state.x)
    n = state.steps + 1
    if not 0.0 < x < 1.0:
        x = _guard_value(n)
    return TentMapState(x, state.mu, n)


def quantize_index(x: float, modulus: int) -> int:
    """floor(x * 10^14) mod modulus for a map value x in (0, 1)."""
    return int(x * _SCALE) % modulus


def _advance(x: float, mu: float, steps: int, count: int) -> tuple[float, int]:
    # Tight-loop twin of step(); identical arithmetic and guard.
    for _ in range(count):
        x = mu * x if x < 0.5 else mu * (1.0 - x)
        steps += 1
        if not 0.0 < x < 1.0:
            x = _guard_value(steps)
    return x, steps


def _warmed(state: TentMapState, burn_in: int) -> tuple[float, float, int]:
    x, mu, steps = state.x, state.mu, state.steps
    if steps < burn_in:
        x, steps = _advance(x, mu, steps, burn_in - steps)
    return x, mu, steps


def keystream_bytes(
    state: TentMapState, n: int, burn_in: int = DEFAULT_BURN_IN
) -> tuple[bytes, TentMapState]:
    """Emit n keystream bytes, one per map iteration.

    Byte i is floor(x_i * 10^14) mod 256 of the i-th iterate. Returns the
    advanced state so a follow-up call continues the same stream.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x, mu, steps = _warmed(state, burn_in)
    out = bytearray(n)
    for i in range(n):
        x = mu * x if x < 0.5 else mu * (1.0 - x)
        steps += 1
        if not 0.0 < x < 1.0:
            x = _guard_value(steps)
        out[i] = int(x * _SCALE) & 255
    return bytes(out), TentMapState(x, mu, steps)


def sort_index_permutation(
    state: TentMapState, n: int, burn_in: int = DEFAULT_BURN_IN
) -> tuple[np.ndarray, TentMapState]:
    """Argsort of n consecutive map values, ties broken by position.

    The result is a permutation of 0..n-1 (each index exactly once);
    stable sorting makes it well-defined even on equal values.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x, mu, steps = _warmed(state, burn_in)
    vals = np.empty(n, dtype=np.float64)
    for i in range(n):
        x = mu * x if x < 0.5 else mu * (1.0 - x)
        steps += 1
        if not 0.0 < x < 1.0:
            x = _guard_value(steps)
        vals[i] = x
    perm = np.argsort(vals, kind="stable")
    return perm, TentMapState(x, mu, steps)


def index_draw(
    state: TentMapState, modulus: int, burn_in: int = DEFAULT_BURN_IN
) -> tuple[int, TentMapState]:
    """One map step, quantized to an index in 0..modulus-1."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    x, mu, steps = _warmed(state, burn_in)
    x = mu * x if x < 0.5 else mu * (1.0 - x)
    steps += 1
    if not 0.0 < x < 1.0:
        x = _guard_value(steps)
    return int(x * _SCALE) % modulus, TentMapState(x, mu, steps)
