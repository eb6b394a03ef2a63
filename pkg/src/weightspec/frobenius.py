"""Initial data of the associated semisimple Frobenius structure.

The exact rational data attached to a weight system: the cyclic matrix
A0 (mu times a cyclic permutation), the diagonal matrix A_inf of spectral
numbers, the 0/1 metric g pairing index k with n-k (k <= n) or mu+n-k
(k >= n+1), the unit basis index 0, and the residue-pairing coefficient
matrix which coincides with g.  The characteristic polynomial of A0 is
T^mu - mu^mu, so its eigenvalues are the mu critical values of the
defining linear form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .spectrum import spectrum_direct
from .weights import WeightSystem


@dataclass(frozen=True)
class FrobeniusInitialData:
    a0: tuple[tuple[Fraction, ...], ...]
    a_inf: tuple[tuple[Fraction, ...], ...]
    metric: tuple[tuple[int, ...], ...]
    unit_index: int

    @property
    def mu(self) -> int:
        return len(self.metric)


@dataclass(frozen=True)
class PairingMatrix:
    """Coefficients c[k][l] of the residue pairing against the basis, in
    units of the normalized value at (0, n) times tau^(-n)."""

    coefficients: tuple[tuple[int, ...], ...]


def metric_partner(k: int, w: WeightSystem) -> int:
    """The unique index paired with k by the metric."""
    if not 0 <= k <= w.mu - 1:
        raise IndexError(f"index {k} outside 0..{w.mu - 1}")
    return w.n - k if k <= w.n else w.mu + w.n - k


def _pairing_pattern(w: WeightSystem) -> tuple[tuple[int, ...], ...]:
    mu = w.mu
    rows = []
    for k in range(mu):
        row = [0] * mu
        row[metric_partner(k, w)] = 1
        rows.append(tuple(row))
    return tuple(rows)


def initial_data(w: WeightSystem) -> FrobeniusInitialData:
    """Construct (A0, A_inf, g, unit index) and verify the type invariants:
    g is a symmetric involutive permutation matrix and
    g*A_inf + A_inf^T*g = n*g."""
    mu = w.mu
    sigma = spectrum_direct(w).spectral_numbers
    a0 = [[Fraction(0)] * mu for _ in range(mu)]
    for k in range(mu):
        a0[(k + 1) % mu][k] = Fraction(mu)
    a_inf = [
        [sigma[k] if j == k else Fraction(0) for k in range(mu)]
        for j in range(mu)
    ]
    metric = _pairing_pattern(w)

    g = [list(row) for row in metric]
    if not linalg.mat_eq(linalg.transpose(g), g):
        raise AssertionError("metric is not symmetric")
    if not linalg.mat_eq(linalg.matmul(g, g), linalg.identity(mu)):
        raise AssertionError("metric is not involutive")
    adjoint = linalg.mat_add(
        linalg.matmul(g, a_inf), linalg.matmul(linalg.transpose(a_inf), g)
    )
    if not linalg.mat_eq(adjoint, linalg.mat_scale(g, w.n)):
        raise AssertionError("g*A_inf + A_inf^T*g != n*g")

    return FrobeniusInitialData(
        tuple(tuple(row) for row in a0),
        tuple(tuple(row) for row in a_inf),
        metric,
        0,
    )


def pairing_matrix(w: WeightSystem) -> PairingMatrix:
    """The residue-pairing coefficients: 1 exactly where the metric is 1
    (value at (0, n) normalized to 1), 0 elsewhere."""
    return PairingMatrix(_pairing_pattern(w))


def charpoly_A0(w: WeightSystem) -> list[Fraction]:
    """Characteristic polynomial of A0, leading coefficient first
    (mu + 1 exact coefficients); equals T^mu - mu^mu."""
    data = initial_data(w)
    coeffs = linalg.char_poly([list(row) for row in data.a0])
    return [Fraction(c) for c in coeffs]
