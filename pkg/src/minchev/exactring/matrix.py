"""Square sparse matrices over an exact ring.

Matrices are stored row-wise as ``{row: {col: value}}`` with no stored
zeros.  They are treated as immutable values: every operation returns a new
matrix, and equality/hashing depend only on the canonical entry set.
"""

from __future__ import annotations

from typing import Any, Iterable, Iterator, Mapping

from ..errors import DimMismatch, RingMismatch
from .rings import Integers, Ring, RingElement

ZZ = Integers()


class SparseMatrix:
    __slots__ = ("dim", "ring", "_rows", "_key")

    def __init__(self, dim: int, ring: Ring, entries: Iterable[tuple[int, int, Any]] = (), *, _rows=None):
        self.dim = dim
        self.ring = ring
        self._key = None
        if _rows is not None:
            self._rows = _rows
            return
        rows: dict[int, dict[int, Any]] = {}
        for r, c, v in entries:
            if not (0 <= r < dim and 0 <= c < dim):
                raise IndexError(f"entry ({r}, {c}) outside {dim}x{dim}")
            v = _raw(v, ring)
            if ring.is_zero(v):
                continue
            row = rows.setdefault(r, {})
            if c in row:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            row[c] = v
        self._rows = rows

    # construction -------------------------------------------------------
    @classmethod
    def _from_rows(cls, dim: int, ring: Ring, rows: dict) -> "SparseMatrix":
        return cls(dim, ring, _rows={r: row for r, row in rows.items() if row})

    @classmethod
    def identity(cls, dim: int, ring: Ring = ZZ) -> "SparseMatrix":
        one = ring.one
        return cls._from_rows(dim, ring, {i: {i: one} for i in range(dim)})

    @classmethod
    def zeros(cls, dim: int, ring: Ring = ZZ) -> "SparseMatrix":
        return cls._from_rows(dim, ring, {})

    @classmethod
    def diagonal(cls, values: list, ring: Ring = ZZ) -> "SparseMatrix":
        return cls(len(values), ring, ((i, i, v) for i, v in enumerate(values)))

    @classmethod
    def from_dense(cls, rows: list[list], ring: Ring = ZZ) -> "SparseMatrix":
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise DimMismatch("matrix must be square")
        return cls(d, ring, ((i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r)))

    # access ---------------------------------------------------------------
    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self._rows.get(r, {}).get(c, self.ring.zero)

    def entries(self) -> Iterator[tuple[int, int, Any]]:
        """Nonzero entries in row-major order."""
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def row(self, r: int) -> Mapping[int, Any]:
        return self._rows.get(r, {})

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def to_dense(self) -> list[list]:
        out = [[self.ring.zero] * self.dim for _ in range(self.dim)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def pattern(self) -> frozenset:
        """Positions of the nonzero entries."""
        return frozenset((r, c) for r, row in self._rows.items() for c in row)

    # equality -------------------------------------------------------------
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.dim, self.ring.spec, tuple(self.entries()))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.dim == other.dim and self.ring == other.ring and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SparseMatrix(dim={self.dim}, ring={self.ring.spec}, nnz={self.nnz})"

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "SparseMatrix") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.spec} vs {other.ring.spec}")
        if self.dim != other.dim:
            raise DimMismatch(f"{self.dim} vs {other.dim}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        R = self.ring
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, orow in other._rows.items():
            row = rows.setdefault(r, {})
            for c, v in orow.items():
                s = R.add(row[c], v) if c in row else v
                if R.is_zero(s):
                    row.pop(c, None)
                else:
                    row[c] = s
        return SparseMatrix._from_rows(self.dim, R, rows)

    def __neg__(self) -> "SparseMatrix":
        R = self.ring
        return SparseMatrix._from_rows(
            self.dim, R, {r: {c: R.neg(v) for c, v in row.items()} for r, row in self._rows.items()}
        )

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        R = self.ring
        add, mul, is_zero = R.add, R.mul, R.is_zero
        orows = other._rows
        rows = {}
        for r, row in self._rows.items():
            acc: dict[int, Any] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    p = mul(a, b)
                    acc[c] = add(acc[c], p) if c in acc else p
            acc = {c: v for c, v in acc.items() if not is_zero(v)}
            if acc:
                rows[r] = acc
        return SparseMatrix._from_rows(self.dim, R, rows)

    def scale(self, s: Any) -> "SparseMatrix":
        R = self.ring
        s = _raw(s, R)
        if R.is_zero(s):
            return SparseMatrix.zeros(self.dim, R)
        rows = {}
        for r, row in self._rows.items():
            new = {c: R.mul(s, v) for c, v in row.items()}
            rows[r] = {c: v for c, v in new.items() if not R.is_zero(v)}
        return SparseMatrix._from_rows(self.dim, R, rows)

    def transpose(self) -> "SparseMatrix":
        rows: dict[int, dict[int, Any]] = {}
        for r, c, v in self.entries():
            rows.setdefault(c, {})[r] = v
        return SparseMatrix._from_rows(self.dim, self.ring, rows)

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def __pow__(self, k: int) -> "SparseMatrix":
        if k < 0:
            raise ValueError("negative powers need an explicit inverse")
        result = SparseMatrix.identity(self.dim, self.ring)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def change_ring(self, ring: Ring) -> "SparseMatrix":
        """Push an integer matrix through the canonical map Z -> ring."""
        if self.ring != ZZ:
            raise RingMismatch("change_ring expects an integer matrix")
        return SparseMatrix(self.dim, ring, ((r, c, ring.from_int(v)) for r, c, v in self.entries()))

    def map_values(self, fn, ring: Ring) -> "SparseMatrix":
        return SparseMatrix(self.dim, ring, ((r, c, fn(v)) for r, c, v in self.entries()))

    # shape predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._rows

    def is_identity(self) -> bool:
        one = self.ring.one
        return len(self._rows) == self.dim and all(row == {r: one} for r, row in self._rows.items())

    def is_diagonal(self) -> bool:
        return all(set(row) <= {r} for r, row in self._rows.items())

    def is_strictly_upper(self) -> bool:
        return all(c > r for r, row in self._rows.items() for c in row)

    def is_strictly_lower(self) -> bool:
        return all(c < r for r, row in self._rows.items() for c in row)

    def is_upper_unitriangular(self) -> bool:
        return self._unitriangular(lambda r, c: c >= r)

    def is_lower_unitriangular(self) -> bool:
        return self._unitriangular(lambda r, c: c <= r)

    def _unitriangular(self, allowed) -> bool:
        one = self.ring.one
        for r in range(self.dim):
            row = self._rows.get(r, {})
            if row.get(r) != one:
                return False
            if not all(allowed(r, c) for c in row):
                return False
        return True

    def is_monomial(self) -> bool:
        if len(self._rows) != self.dim or any(len(row) != 1 for row in self._rows.values()):
            return False
        cols = {c for row in self._rows.values() for c in row}
        return len(cols) == self.dim

    def diagonal_values(self) -> list:
        return [self[i, i] for i in range(self.dim)]


def _raw(v: Any, ring: Ring) -> Any:
    """Normalize ints and tagged elements to raw values; pass raw values through."""
    if isinstance(v, RingElement):
        return ring.coerce(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return ring.from_int(v)
    return v


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def identity(dim: int, ring: Ring = ZZ) -> SparseMatrix:
    return SparseMatrix.identity(dim, ring)


def mat_mul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b


def mat_add(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a + b


def scalar_mul(s: Any, a: SparseMatrix) -> SparseMatrix:
    return a.scale(s)


def transpose(a: SparseMatrix) -> SparseMatrix:
    return a.transpose()
