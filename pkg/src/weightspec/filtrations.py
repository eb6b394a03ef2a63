"""Jordan structure of the monodromy and the index-level filtrations.

Everything here is combinatorial in the spectrum: indices k = 0..mu-1
are grouped by the fractional part alpha(k) of the spectrum value
(each class is a generalized eigenspace of the monodromy); within the
canonical order a maximal run of equal values is a Jordan block of the
nilpotent part.  The block structure determines monodromy weights nu_k,
the weight filtrations M and W, the decreasing filtration H^p and its
opposite G_p built from floor(sigma), the conjugation involution on
indices, and the orthogonality pattern of the metric across classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .frobenius import metric_partner
from .spectrum import Spectrum, spectrum_direct
from .weights import WeightSystem


class UnknownEigenvalueClass(ValueError):
    """The requested fractional class does not occur in the spectrum."""


class IndexOutOfRange(IndexError):
    """Basis index outside 0..mu-1."""


@dataclass(frozen=True)
class JordanBlock:
    alpha: Fraction
    value: Fraction
    start: int
    size: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.size)


@dataclass(frozen=True)
class JordanData:
    """Blocks in canonical index order plus per-index weight data.

    ``nu[k]`` is the monodromy weight of index k (block top weight
    size-1, dropping by 2 per step into the block); ``offset[k]`` is the
    position of k within its block.
    """

    blocks: tuple[JordanBlock, ...]
    nu: tuple[int, ...]
    offset: tuple[int, ...]

    def classes(self) -> dict[Fraction, tuple[JordanBlock, ...]]:
        by_alpha: dict[Fraction, list[JordanBlock]] = {}
        for block in self.blocks:
            by_alpha.setdefault(block.alpha, []).append(block)
        return {a: tuple(bs) for a, bs in by_alpha.items()}

    def size_multiset(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for block in self.blocks:
            counts[block.size] = counts.get(block.size, 0) + 1
        return counts


@dataclass(frozen=True)
class FiltrationReport:
    """Index sets of all filtrations, the primitive indices and the
    conjugation involution."""

    hp: dict[int, frozenset[int]]
    gp: dict[int, frozenset[int]]
    m: dict[int, frozenset[int]]
    w: dict[int, frozenset[int]]
    primitive: frozenset[int]
    conj: tuple[int, ...]


def _spectrum(w: WeightSystem) -> Spectrum:
    return spectrum_direct(w)


@lru_cache(maxsize=1024)
def jordan_blocks(w: WeightSystem) -> JordanData:
    """Split 0..mu-1 into maximal runs of equal spectrum value.

    Verifies the size bounds: the zero-value block has size exactly n+1;
    blocks with nonzero integer value have size <= n-1; blocks with
    noninteger value have size <= n.  Results are immutable and cached.
    """
    spec = _spectrum(w)
    mu, n = w.mu, w.n
    values, fracs = spec.values, spec.fractional_parts

    blocks: list[JordanBlock] = []
    start = 0
    for k in range(1, mu + 1):
        if k == mu or values[k] != values[start]:
            blocks.append(
                JordanBlock(fracs[start], values[start], start, k - start)
            )
            start = k

    nu = [0] * mu
    offset = [0] * mu
    for block in blocks:
        for j in range(block.size):
            nu[block.start + j] = block.size - 1 - 2 * j
            offset[block.start + j] = j

    for block in blocks:
        if block.value == 0:
            if block.size != n + 1:
                raise AssertionError(f"zero block has size {block.size} != {n + 1}")
        elif block.value.denominator == 1:
            if block.size > n - 1:
                raise AssertionError(
                    f"integer-value block at {block.start} has size {block.size} > {n - 1}"
                )
        elif block.size > n:
            raise AssertionError(
                f"noninteger-value block at {block.start} has size {block.size} > {n}"
            )
    assert sum(b.size for b in blocks) == mu
    return JordanData(tuple(blocks), tuple(nu), tuple(offset))


def eigenvalue_classes(w: WeightSystem) -> dict[Fraction, list[int]]:
    """Indices grouped by fractional part, each list in canonical order."""
    spec = _spectrum(w)
    classes: dict[Fraction, list[int]] = {}
    for k, alpha in enumerate(spec.fractional_parts):
        classes.setdefault(alpha, []).append(k)
    return classes


def nilpotent_matrix(w: WeightSystem, alpha: Fraction | int) -> list[list[Fraction]]:
    """Matrix of the normalized nilpotent operator on the class of
    ``alpha``: basis vector for index k maps to the one for k+1 when the
    spectrum values agree, to zero otherwise."""
    alpha = Fraction(alpha)
    classes = eigenvalue_classes(w)
    if alpha not in classes:
        raise UnknownEigenvalueClass(f"no eigenvalue class for alpha = {alpha}")
    indices = classes[alpha]
    position = {k: pos for pos, k in enumerate(indices)}
    values = _spectrum(w).values
    size = len(indices)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for k in indices:
        if k + 1 < w.mu and values[k + 1] == values[k]:
            matrix[position[k + 1]][position[k]] = Fraction(1)
    return matrix


def primitive_indices(w: WeightSystem) -> frozenset[int]:
    """Block starts: index 0 plus every k >= n+1 where the value jumps.

    Cross-validated against the block decomposition (one per block).
    """
    values = _spectrum(w).values
    direct = {0} | {
        k for k in range(w.n + 1, w.mu) if values[k - 1] < values[k]
    }
    starts = {block.start for block in jordan_blocks(w).blocks}
    if direct != starts:
        raise AssertionError(f"primitive characterization {direct} != block starts {starts}")
    return frozenset(starts)


def conjugate_index(w: WeightSystem, k: int) -> int:
    """The conjugation involution: identity on 0..n, else mu+n-k-nu(k)."""
    if not 0 <= k <= w.mu - 1:
        raise IndexOutOfRange(f"index {k} outside 0..{w.mu - 1}")
    if k <= w.n:
        return k
    nu = jordan_blocks(w).nu
    return w.mu + w.n - k - nu[k]


def saito_filtration(w: WeightSystem) -> FiltrationReport:
    """All index-level filtrations.

    * hp[p] = {k : floor(sigma(k)) >= p} for p = 0..n+1 (decreasing),
    * gp[p] = {k : floor(sigma(k)) <= p} for p = 0..n (increasing),
    * m[j]  = {k : nu(k) <= j} (monodromy weight filtration),
    * w[j]  = m[j-n-1] on nonzero classes together with m[j-n] on the
      zero class (the shifted weight filtration),
    * primitive block starts and the conjugation involution.
    """
    spec = _spectrum(w)
    mu, n = w.mu, w.n
    floors = [s.numerator // s.denominator for s in spec.spectral_numbers]
    data = jordan_blocks(w)
    nu = data.nu

    hp = {
        p: frozenset(k for k in range(mu) if floors[k] >= p)
        for p in range(n + 2)
    }
    gp = {
        p: frozenset(k for k in range(mu) if floors[k] <= p)
        for p in range(n + 1)
    }
    m = {
        j: frozenset(k for k in range(mu) if nu[k] <= j)
        for j in range(-n - 1, n + 2)
    }
    fracs = spec.fractional_parts
    w_filt = {}
    for j in range(-1, 2 * n + 2):
        members = set()
        for k in range(mu):
            bound = j - n if fracs[k] == 0 else j - n - 1
            if nu[k] <= bound:
                members.add(k)
        w_filt[j] = frozenset(members)

    conj = tuple(conjugate_index(w, k) for k in range(mu))
    report = FiltrationReport(hp, gp, m, w_filt, primitive_indices(w), conj)
    _validate_report(report, floors, n, mu)
    return report


def _validate_report(report: FiltrationReport, floors: list[int], n: int, mu: int) -> None:
    if report.hp[0] != frozenset(range(mu)) or report.hp[n + 1]:
        raise AssertionError("hp endpoints wrong")
    for p in range(n + 1):
        if not report.hp[p + 1] <= report.hp[p]:
            raise AssertionError(f"hp not decreasing at {p}")
        if p < n and not report.gp[p] <= report.gp[p + 1]:
            raise AssertionError(f"gp not increasing at {p}")
    levels = sorted(report.m)
    for lo, hi in zip(levels, levels[1:]):
        if not report.m[lo] <= report.m[hi]:
            raise AssertionError(f"m not increasing at {lo}")
    for k in range(mu):
        if k not in report.hp[floors[k]] or k not in report.gp[floors[k]]:
            raise AssertionError(f"index {k} missing at its own level")
        if floors[k] + 1 <= n + 1 and k in report.hp[floors[k] + 1]:
            raise AssertionError(f"index {k} too deep in hp")
        if floors[k] - 1 >= 0 and k in report.gp[floors[k] - 1]:
            raise AssertionError(f"index {k} too deep in gp")


def saito_identity_check(w: WeightSystem, p: int) -> bool:
    """Combinatorial identity behind the canonical opposite filtration:
    conjugating {k : floor(sigma(k)) + nu(k) <= n - p, minus one more when
    sigma(k) is not an integer} lands exactly on hp[p]."""
    spec = _spectrum(w)
    sigma = spec.spectral_numbers
    data = jordan_blocks(w)
    nu = data.nu
    selected = set()
    for k in range(w.mu):
        floor_sigma = sigma[k].numerator // sigma[k].denominator
        bound = w.n - p - (0 if sigma[k].denominator == 1 else 1)
        if floor_sigma + nu[k] <= bound:
            selected.add(k)
    image = {conjugate_index(w, k) for k in selected}
    target = {
        k
        for k in range(w.mu)
        if sigma[k].numerator // sigma[k].denominator >= p
    }
    return image == target


def orthogonality_check(w: WeightSystem, alpha: Fraction | int, p: int) -> bool:
    """Check the metric-orthogonality of the canonical filtration across
    partner classes: the orthogonal complement of the span of
    {k in class alpha : floor(sigma(k)) >= p}, taken inside the partner
    class (1-alpha for alpha != 0, the zero class itself for alpha = 0),
    must be the partner filtration piece at level n-p (resp. n+1-p)."""
    alpha = Fraction(alpha)
    spec = _spectrum(w)
    classes = eigenvalue_classes(w)
    if alpha not in classes:
        raise UnknownEigenvalueClass(f"no eigenvalue class for alpha = {alpha}")
    partner_alpha = Fraction(0) if alpha == 0 else 1 - alpha
    partner_class = classes.get(partner_alpha, [])
    sigma = spec.spectral_numbers

    def floor_sigma(k: int) -> int:
        return sigma[k].numerator // sigma[k].denominator

    span = {k for k in classes[alpha] if floor_sigma(k) >= p}
    complement = {
        j for j in partner_class if metric_partner(j, w) not in span
    }
    level = w.n + 1 - p if alpha == 0 else w.n - p
    expected = {j for j in partner_class if floor_sigma(j) >= level}
    return complement == expected
