"""Exact dense matrix helpers over the rationals.

Matrices are lists of row lists with int or Fraction entries; every
operation is exact.  The characteristic polynomial is computed by an
exact similarity reduction to upper Hessenberg form followed by the
standard Hessenberg leading-minor recurrence (no divisions once the
matrix is Hessenberg, so integer matrices stay integer).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]
Matrix = list[list[Scalar]]


def identity(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out: Matrix = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        row_a = a[i]
        row_out = out[i]
        for k in range(inner):
            aik = row_a[k]
            if not aik:
                continue
            row_b = b[k]
            for j in range(cols):
                if row_b[j]:
                    row_out[j] += aik * row_b[j]
    return out


def mat_add(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Sequence[Sequence[Scalar]], factor: Scalar) -> Matrix:
    return [[x * factor for x in row] for row in a]


def transpose(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_eq(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> bool:
    if len(a) != len(b):
        return False
    return all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def mat_pow(a: Matrix, exponent: int) -> Matrix:
    out = identity(len(a))
    for _ in range(exponent):
        out = matmul(out, a)
    return out


def is_zero_matrix(a: Sequence[Sequence[Scalar]]) -> bool:
    return all(not x for row in a for x in row)


def _to_hessenberg(matrix: Sequence[Sequence[Scalar]]) -> Matrix:
    """Similarity-reduce to upper Hessenberg form with exact pivoting."""
    n = len(matrix)
    h: Matrix = [[Fraction(x) for x in row] for row in matrix]
    for col in range(n - 2):
        pivot_row = next(
            (r for r in range(col + 1, n) if h[r][col]), None
        )
        if pivot_row is None:
            continue
        if pivot_row != col + 1:
            h[pivot_row], h[col + 1] = h[col + 1], h[pivot_row]
            for row in h:
                row[pivot_row], row[col + 1] = row[col + 1], row[pivot_row]
        pivot = h[col + 1][col]
        for r in range(col + 2, n):
            if not h[r][col]:
                continue
            factor = h[r][col] / pivot
            h[r] = [x - factor * y for x, y in zip(h[r], h[col + 1])]
            # inverse column operation keeps the conjugacy class
            for row in h:
                row[col + 1] += factor * row[r]
    return h


def _poly_mul_linear(poly: list[Scalar], constant: Scalar) -> list[Scalar]:
    """poly(T) * (T - constant), coefficients leading-first."""
    out: list[Scalar] = poly + [0]
    if constant:
        for i, c in enumerate(poly):
            out[i + 1] -= constant * c
    return out


def char_poly(matrix: Sequence[Sequence[Scalar]]) -> list[Scalar]:
    """Monic characteristic polynomial det(T*I - M), leading coefficient
    first (length n+1)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return [1]
    hessenberg = all(
        not matrix[i][j] for i in range(n) for j in range(n) if i > j + 1
    )
    h = matrix if hessenberg else _to_hessenberg(matrix)

    # leading principal minors of (T*I - h): p[m] has degree m
    p: list[list[Scalar]] = [[1]]
    for m in range(1, n + 1):
        poly = _poly_mul_linear(p[m - 1], h[m - 1][m - 1])
        subdiag_product: Scalar = 1
        for i in range(m - 1, 0, -1):
            subdiag_product *= h[i][i - 1]
            if not subdiag_product:
                break
            coupling = h[i - 1][m - 1]
            if not coupling:
                continue
            factor = coupling * subdiag_product
            lower = p[i - 1]
            offset = len(poly) - len(lower)
            for idx, c in enumerate(lower):
                poly[offset + idx] -= factor * c
        p.append(poly)
    return p[n]
