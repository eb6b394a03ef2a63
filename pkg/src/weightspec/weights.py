"""Validation and canonicalization of positive weight systems.

A weight system is a tuple of positive integers (w_0, ..., w_n) with
gcd 1.  Everything downstream (spectra, connection matrices, filtrations)
is computed from such a tuple in exact rational arithmetic; the scalar
type used throughout the package is :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class WeightSystemError(ValueError):
    """Base class for invalid weight-system input."""


class TooFewWeights(WeightSystemError):
    """Fewer than two weights were supplied."""


class NonPositiveWeight(WeightSystemError):
    """Some weight is zero or negative."""


class GcdNotOne(WeightSystemError):
    """The weights share a common factor greater than one."""


TWO_WEIGHT_WARNING = (
    "two-weight systems (n = 1) are a degenerate edge case; "
    "all computed identities remain well-defined"
)


@dataclass(frozen=True)
class WeightSystem:
    """An ascending tuple of positive integers with gcd 1.

    ``permutation[j]`` is the position in the original input of the j-th
    sorted weight (a stable argsort), so reports can echo the user's order.
    """

    weights: tuple[int, ...]
    permutation: tuple[int, ...] = field(default=(), compare=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def mu(self) -> int:
        return sum(self.weights)

    @property
    def max_weight(self) -> int:
        return self.weights[-1]

    def __str__(self) -> str:
        return "(" + ",".join(str(w) for w in self.weights) + ")"


def make_weight_system(
    raw: Iterable[int], *, allow_gcd_normalize: bool = False
) -> WeightSystem:
    """Validate, sort ascending and wrap a list of weights.

    Raises :class:`TooFewWeights`, :class:`NonPositiveWeight` or
    :class:`GcdNotOne`.  With ``allow_gcd_normalize`` a common factor is
    divided out instead of rejected (recorded in ``warnings``).
    Idempotent on its own output.
    """
    entries = list(raw)
    if len(entries) < 2:
        raise TooFewWeights(f"need at least 2 weights, got {len(entries)}")
    for w in entries:
        if not isinstance(w, int) or isinstance(w, bool):
            raise NonPositiveWeight(f"weights must be integers, got {w!r}")
        if w <= 0:
            raise NonPositiveWeight(f"weights must be positive, got {w}")

    warnings: list[str] = []
    g = math.gcd(*entries)
    if g != 1:
        if not allow_gcd_normalize:
            raise GcdNotOne(f"gcd is {g}, not 1")
        entries = [w // g for w in entries]
        warnings.append(f"weights divided by common factor {g}")

    order = sorted(range(len(entries)), key=lambda j: (entries[j], j))
    weights = tuple(entries[j] for j in order)
    if len(weights) == 2:
        warnings.append(TWO_WEIGHT_WARNING)
    return WeightSystem(weights, tuple(order), tuple(warnings))


def as_weight_system(w: "WeightSystem | Sequence[int]") -> WeightSystem:
    """Coerce a tuple of integers to a validated :class:`WeightSystem`."""
    if isinstance(w, WeightSystem):
        return w
    return make_weight_system(w)
