"""Spectrum of a weight system, by two independent algorithms.

For weights (w_0, ..., w_n) with sum mu, the spectrum is built from the
mu-element multiset obtained as the disjoint union of the arithmetic
ladders {l*mu/w_i : l = 0, ..., w_i - 1}.  Sorting it nondecreasingly
gives the values s(0) <= ... <= s(mu-1); the spectral numbers are
sigma(k) = k - s(k) and the spectral polynomial is prod_k (S + sigma(k)).

The same data is generated by an integer step recursion: starting from
the zero exponent vector, repeatedly increment the coordinate whose
current ratio a_i/w_i is minimal (smallest index on ties).  Both routes
must agree exactly; tests enforce this.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .weights import WeightSystem


class BijectionViolation(RuntimeError):
    """Internal self-check failure: step pairs do not enumerate the ladders."""


@dataclass(frozen=True)
class StepSequence:
    """The pairs (exponents[k], indices[k]) of the generating recursion.

    ``exponents[k]`` is the integer vector after k increments (entries sum
    to k); ``indices[k]`` is the coordinate with minimal exponents[k]_i/w_i
    (minimal index on ties), i.e. the coordinate incremented to reach
    ``exponents[k+1]``.  Both run over k = 0..k_max with k_max >= mu.
    """

    exponents: tuple[tuple[int, ...], ...]
    indices: tuple[int, ...]

    @property
    def k_max(self) -> int:
        return len(self.indices) - 1


@dataclass(frozen=True)
class Spectrum:
    """Exact spectral data: values s(k), sigma(k) = k - s(k), and the
    fractional parts alpha(k) = ceil(s(k)) - s(k) in [0, 1)."""

    values: tuple[Fraction, ...]
    spectral_numbers: tuple[Fraction, ...]
    fractional_parts: tuple[Fraction, ...]

    @property
    def mu(self) -> int:
        return len(self.values)


def _argmin_ratio(a: list[int], weights: tuple[int, ...]) -> int:
    # min index attaining min_j a_j/w_j, compared by integer cross products
    best = 0
    for j in range(1, len(weights)):
        if a[j] * weights[best] < a[best] * weights[j]:
            best = j
    return best


def step_sequence(w: WeightSystem, k_max: int | None = None) -> StepSequence:
    """Run the increment recursion up to ``k_max`` (default mu) steps."""
    weights = w.weights
    mu = w.mu
    if k_max is None:
        k_max = mu
    a = [0] * len(weights)
    exponents = [tuple(a)]
    indices = [0]
    for k in range(k_max):
        i = indices[k]
        if k < mu and a[i] > weights[i] - 1:
            raise BijectionViolation(
                f"step {k}: exponent {a[i]} exceeds weight {weights[i]} - 1"
            )
        a[i] += 1
        exponents.append(tuple(a))
        indices.append(_argmin_ratio(a, weights))
    if k_max >= mu and exponents[mu] != weights:
        raise BijectionViolation(f"exponents[{mu}] = {exponents[mu]} != {weights}")
    return StepSequence(tuple(exponents), tuple(indices))


def spectrum_from_steps(seq: StepSequence, w: WeightSystem) -> Spectrum:
    """Spectrum via the recursion: s(k) = mu * a(k)_{i(k)} / w_{i(k)}."""
    mu = w.mu
    if seq.k_max < mu:
        raise ValueError(f"step sequence too short for mu = {mu}")
    values = tuple(
        Fraction(mu * seq.exponents[k][seq.indices[k]], w.weights[seq.indices[k]])
        for k in range(mu)
    )
    return _finish(values)


@lru_cache(maxsize=4096)
def spectrum_direct(w: WeightSystem) -> Spectrum:
    """Spectrum via the sorted multiset of the ladders {l*mu/w_i}.

    Ties between equal values from different ladders are ordered by the
    ladder index i, which reproduces the recursion's emission order.
    Results are immutable and cached.
    """
    mu = w.mu
    entries = [
        Fraction(l * mu, wi)
        for i, wi in enumerate(w.weights)
        for l in range(wi)
    ]
    entries.sort()
    return _finish(tuple(entries))


def merged_ladder(w: WeightSystem) -> list[tuple[Fraction, int, int]]:
    """The multiset as (value, ladder index i, rung l) triples in canonical
    order; matches [(s(k), i(k), a(k)_{i(k)})] from the recursion."""
    mu = w.mu
    triples = [
        (Fraction(l * mu, wi), i, l)
        for i, wi in enumerate(w.weights)
        for l in range(wi)
    ]
    triples.sort(key=lambda t: (t[0], t[1]))
    return triples


def _finish(values: tuple[Fraction, ...]) -> Spectrum:
    k_minus = tuple(k - s for k, s in enumerate(values))
    frac = tuple(Fraction(math.ceil(s)) - s for s in values)
    return Spectrum(values, k_minus, frac)


def spectral_polynomial(w: WeightSystem) -> list[tuple[Fraction, int]]:
    """Roots with multiplicities of prod_k (S + sigma(k)), sorted by root."""
    spec = spectrum_direct(w)
    counts = Counter(spec.spectral_numbers)
    return sorted(counts.items())


def check_symmetry(spec: Spectrum, w: WeightSystem | None = None) -> list[str]:
    """Verify the symmetry and range identities; returns violations (empty
    on success):

    * s(k) + s(mu+n-k) = mu for k = n+1..mu-1,
    * sigma(k+1) <= sigma(k) + 1, reading sigma(mu) as 0,
    * 0 <= sigma(k) <= n with sigma(k) = 0 only at k = 0 and = n only at k = n,
    * sigma(k) + sigma(n-k) = n for k = 0..n.

    The dimension is read off the spectrum itself (the value 0 occurs with
    multiplicity exactly n+1); passing ``w`` just cross-checks it.
    """
    mu = spec.mu
    n = sum(1 for v in spec.values if v == 0) - 1
    if w is not None and (w.mu, w.n) != (mu, n):
        return [f"dimension mismatch: spectrum has (mu, n) = ({mu}, {n})"]
    s, sigma = spec.values, spec.spectral_numbers
    bad: list[str] = []
    for k in range(n + 1, mu):
        if s[k] + s[mu + n - k] != mu:
            bad.append(f"sym: s({k}) + s({mu + n - k}) = {s[k] + s[mu + n - k]} != {mu}")
    for k in range(mu):
        nxt = sigma[k + 1] if k + 1 < mu else Fraction(0)
        if nxt > sigma[k] + 1:
            bad.append(f"alphaleq: sigma({k + 1}) = {nxt} > sigma({k}) + 1")
    for k in range(mu):
        if not 0 <= sigma[k] <= n:
            bad.append(f"range: sigma({k}) = {sigma[k]} outside [0, {n}]")
        if sigma[k] == 0 and k != 0:
            bad.append(f"range: sigma({k}) = 0 at k != 0")
        if sigma[k] == n and k != n:
            bad.append(f"range: sigma({k}) = {n} at k != {n}")
    for k in range(n + 1):
        if sigma[k] + sigma[n - k] != n:
            bad.append(f"low-range sym: sigma({k}) + sigma({n - k}) != {n}")
    return bad


def index_bijection(seq: StepSequence, w: WeightSystem) -> dict[int, tuple[int, int]]:
    """The map k -> (i(k), a(k)_{i(k)}) on k = 0..mu-1, verified to hit each
    ladder pair (i, l) with 0 <= l < w_i exactly once."""
    mu = w.mu
    mapping = {
        k: (seq.indices[k], seq.exponents[k][seq.indices[k]]) for k in range(mu)
    }
    expected = {(i, l) for i, wi in enumerate(w.weights) for l in range(wi)}
    image = set(mapping.values())
    if image != expected:
        raise BijectionViolation(
            f"image has {len(image)} pairs, expected the {len(expected)} ladder pairs"
        )
    return mapping
