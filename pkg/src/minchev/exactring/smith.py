"""Integer lattice utilities: Smith normal form and friends."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntMatrix = list[list[int]]


def _eye(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


@dataclass(frozen=True)
class SmithForm:
    """``left @ M @ right == diag`` with ``left``, ``right`` unimodular.

    ``diagonal`` holds the min(m, n) diagonal entries of ``diag``; the
    nonzero ones come first and each divides the next.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)

    def diag_matrix(self) -> IntMatrix:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for k, d in enumerate(self.diagonal):
            out[k][k] = d
        return out


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithForm:
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(map(int, row)) for row in M]
    L, R = _eye(m), _eye(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        L[dst] = [x + q * y for x, y in zip(L[dst], L[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in R:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            # clear column t and row t, moving any smaller remainder into the pivot
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        moved = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        moved = True
            if moved:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]

    diagonal = tuple(A[k][k] for k in range(min(m, n)))
    return SmithForm(diagonal, L, R, (m, n))


def integer_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def rational_inverse(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def lattice_index(rows: Sequence[Sequence[int]]) -> Optional[int]:
    """Index of the row lattice of ``rows`` in Z^n, or None if infinite."""
    n = len(rows[0])
    snf = smith_normal_form(rows)
    if snf.rank < n:
        return None
    out = 1
    for d in snf.invariant_factors:
        out *= d
    return out


def in_row_lattice(v: Sequence[int], rows: Sequence[Sequence[int]], snf: Optional[SmithForm] = None) -> bool:
    """Whether ``v`` is an integer combination of ``rows``."""
    snf = snf or smith_normal_form(rows)
    # v = x M  <=>  v R = (x L^-1) D
    y = [sum(v[k] * snf.right[k][j] for k in range(len(v))) for j in range(len(v))]
    for j, yj in enumerate(y):
        d = snf.diagonal[j] if j < len(snf.diagonal) else 0
        if d == 0:
            if yj:
                return False
        elif yj % d:
            return False
    return True


def left_kernel(M: Sequence[Sequence[int]]) -> IntMatrix:
    """A Z-basis of {x : x M = 0}, one vector per row."""
    snf = smith_normal_form(M)
    return [list(snf.left[k]) for k in range(snf.rank, len(M))]


def abelian_invariants(generators: Sequence[Sequence[int]], modulus: int) -> tuple[int, ...]:
    """Invariant factors (>1) of the subgroup of (Z/modulus)^d spanned by ``generators``."""
    r = len(generators)
    if r == 0:
        return ()
    d = len(generators[0])
    stacked = [list(g) for g in generators] + [[modulus * int(i == j) for j in range(d)] for i in range(d)]
    relations = [row[:r] for row in left_kernel(stacked)]
    snf = smith_normal_form(relations)
    factors = [f for f in snf.invariant_factors if f > 1]
    if snf.rank < r:
        raise ValueError("relation lattice has deficient rank")
    return tuple(factors)


def gcd_list(xs: Sequence[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
