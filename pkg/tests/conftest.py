"""Shared corpus helpers.

Exhaustive sweeps default to per-test bounds small enough that the whole
suite stays within about a minute; setting WEIGHTSPEC_MU_FULL=60 (or any
bound) widens every exhaustive sweep to that value for a patient full run.
Seeded random systems always extend coverage to larger mu in every run.
"""

from __future__ import annotations

import math
import os
import random
from typing import Iterator

from weightspec import WeightSystem

FULL_MU = int(os.environ.get("WEIGHTSPEC_MU_FULL", "0"))


def exhaustive_mu(default: int) -> int:
    return max(FULL_MU, default) if FULL_MU else default


def weight_systems_up_to(mu_max: int) -> Iterator[tuple[int, ...]]:
    """All nondecreasing gcd-1 tuples of >= 2 positive integers summing
    to at most mu_max."""

    def gen(remaining: int, minimum: int, prefix: list[int], g: int):
        if remaining == 0:
            if len(prefix) >= 2 and g == 1:
                yield tuple(prefix)
            return
        for part in range(minimum, remaining + 1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix, math.gcd(g, part))
            prefix.pop()

    for total in range(2, mu_max + 1):
        yield from gen(total, 1, [], 0)


def weight_systems_with_parts(parts: int, mu_max: int) -> Iterator[tuple[int, ...]]:
    """All nondecreasing gcd-1 tuples of exactly ``parts`` positive
    integers summing to at most mu_max."""

    def gen(minimum: int, budget: int, prefix: list[int], g: int):
        remaining = parts - len(prefix)
        if remaining == 0:
            if g == 1:
                yield tuple(prefix)
            return
        for v in range(minimum, budget // remaining + 1):
            prefix.append(v)
            yield from gen(v, budget - v, prefix, math.gcd(g, v))
            prefix.pop()

    yield from gen(1, mu_max, [], 0)


def random_weight_tuple(
    rng: random.Random, mu_max: int, max_parts: int = 6, min_mu: int = 2
) -> tuple[int, ...]:
    while True:
        count = rng.randint(2, max_parts)
        tup = tuple(
            sorted(rng.randint(1, max(1, mu_max // count)) for _ in range(count))
        )
        if min_mu <= sum(tup) <= mu_max and math.gcd(*tup) == 1:
            return tup


def random_systems(
    seed: int, count: int, mu_max: int, max_parts: int = 6
) -> list[WeightSystem]:
    rng = random.Random(seed)
    return [
        WeightSystem(random_weight_tuple(rng, mu_max, max_parts))
        for _ in range(count)
    ]
