"""Seeded generation of random simplex economies.

Draws come from ``random.Random(seed)`` (Mersenne Twister) through
``randint`` only, which is built on the integer stream and gives the same
sequence on every platform. No float ever reaches a matrix entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .equilibrium import compute_min_terms, group_preferences, is_minimal
from .model import SimplexEconomy, validate_economy

__all__ = ["GenSpec", "GenerationFailed", "generate_economy"]

MAX_RETRIES = 100


class GenerationFailed(RuntimeError):
    def __init__(self, spec: "GenSpec", reason: str):
        super().__init__(f"could not generate economy (seed={spec.seed}): {reason}")
        self.spec = spec


@dataclass(frozen=True)
class GenSpec:
    m: int
    n: int
    seed: int = 0
    denominator_bound: int = 12
    force_minimal: bool = False

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be at least 1")
        if self.denominator_bound < 1:
            raise ValueError("denominator_bound must be at least 1")


def _draw_matrix(spec: GenSpec, rng: random.Random) -> list[list[Fraction]]:
    # Column j of W is (x_1, ..., x_m) / sum(x), with x_i in 1..bound.
    cols = []
    for _ in range(spec.n):
        draws = [rng.randint(1, spec.denominator_bound) for _ in range(spec.m)]
        total = sum(draws)
        cols.append([Fraction(x, total) for x in draws])
    return [list(row) for row in zip(*cols)]


def _force_minimal(
    W: list[list[Fraction]], sigma: list[int], rng: random.Random
) -> bool:
    """Lower one consumer's entries to the Min terms, moving mass to others.

    Returns False if an edit would leave [0,1]; the caller redraws.
    """
    m = len(W)
    pivot = rng.randrange(m)
    own = sigma[pivot]
    for j in dict.fromkeys(sigma):
        if j == own:
            continue
        others = [i for i in range(m) if sigma[i] != j]
        floor = min(W[i][j - 1] for i in others)
        excess = W[pivot][j - 1] - floor
        if excess == 0:
            continue
        receivers = [i for i in others if i != pivot]
        target = rng.choice(receivers)
        if W[target][j - 1] + excess > 1:
            return False
        W[pivot][j - 1] = floor
        W[target][j - 1] += excess
    return True


def generate_economy(spec: GenSpec) -> SimplexEconomy:
    rng = random.Random(spec.seed)
    for _ in range(MAX_RETRIES):
        W = _draw_matrix(spec, rng)
        sigma = [rng.randint(1, spec.n) for _ in range(spec.m)]
        if spec.force_minimal and not _force_minimal(W, sigma, rng):
            continue
        econ = validate_economy(W, sigma)
        if spec.force_minimal:
            groups = group_preferences(econ.sigma)
            if not is_minimal(econ, groups, compute_min_terms(econ, groups)):
                continue
        return econ
    raise GenerationFailed(spec, f"no valid economy after {MAX_RETRIES} attempts")

