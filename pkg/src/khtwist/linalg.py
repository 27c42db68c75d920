"""Exact integer linear algebra for sparse differentials.

Everything here works over arbitrary-precision Python integers; no floating
point is involved anywhere.  Rank is computed by fraction-free elimination:
rows are combined as ``pivot*row - coeff*pivot_row`` and then divided by
their content, which preserves rank exactly while keeping entries integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator


class SparseIntMatrix:
    """Row-major sparse matrix with integer entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: list[dict[int, int]]):
        if len(rows) != nrows:
            raise ValueError("row list does not match nrows")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseIntMatrix":
        return cls(nrows, ncols, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def from_triplets(cls, nrows: int, ncols: int, triplets: Iterable[tuple[int, int, int]]) -> "SparseIntMatrix":
        rows: list[dict[int, int]] = [{} for _ in range(nrows)]
        for r, c, v in triplets:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            nv = rows[r].get(c, 0) + v
            if nv:
                rows[r][c] = nv
            else:
                rows[r].pop(c, None)
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense: list[list[int]]) -> "SparseIntMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        rows = [{c: v for c, v in enumerate(row) if v} for row in dense]
        return cls(nrows, ncols, rows)

    def triplets(self) -> Iterator[tuple[int, int, int]]:
        for r, row in enumerate(self.rows):
            for c in sorted(row):
                yield (r, c, row[c])

    def to_dense(self) -> list[list[int]]:
        return [[row.get(c, 0) for c in range(self.ncols)] for row in self.rows]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def mul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape()} by {other.shape()}")
        rows: list[dict[int, int]] = []
        for row in self.rows:
            acc: dict[int, int] = {}
            for k, v in row.items():
                for c, w in other.rows[k].items():
                    nv = acc.get(c, 0) + v * w
                    if nv:
                        acc[c] = nv
                    else:
                        del acc[c]
            rows.append(acc)
        return SparseIntMatrix(self.nrows, other.ncols, rows)

    def sub(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.shape() != other.shape():
            raise ValueError("shape mismatch")
        rows = []
        for r1, r2 in zip(self.rows, other.rows):
            acc = dict(r1)
            for c, v in r2.items():
                nv = acc.get(c, 0) - v
                if nv:
                    acc[c] = nv
                else:
                    acc.pop(c, None)
            rows.append(acc)
        return SparseIntMatrix(self.nrows, self.ncols, rows)

    def transpose(self) -> "SparseIntMatrix":
        rows: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                rows[c][r] = v
        return SparseIntMatrix(self.ncols, self.nrows, rows)

    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self):
        return f"<SparseIntMatrix {self.nrows}x{self.ncols}, nnz={self.nnz()}>"


def matrix_rank(m: SparseIntMatrix) -> int:
    """Exact rank over the rationals by fraction-free sparse elimination.

    Pivots in columns or rows with a single nonzero entry are peeled off
    first (they cost nothing); the remaining core is eliminated with a
    Markowitz-style pivot choice preferring unit entries.
    """
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(m.rows) if r}
    col_rows: dict[int, set[int]] = {}
    for i, r in rows.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    rank = 0

    def detach_row(i: int) -> dict[int, int]:
        r = rows.pop(i)
        for c in r:
            s = col_rows[c]
            s.discard(i)
            if not s:
                del col_rows[c]
        return r

    def remove_entry(i: int, c: int) -> None:
        del rows[i][c]
        s = col_rows[c]
        s.discard(i)
        if not s:
            del col_rows[c]
        if not rows[i]:
            del rows[i]

    while rows:
        single_col = next((c for c, s in col_rows.items() if len(s) == 1), None)
        if single_col is not None:
            (i,) = col_rows[single_col]
            detach_row(i)
            rank += 1
            continue
        single_row = next((i for i, r in rows.items() if len(r) == 1), None)
        if single_row is not None:
            (c,) = rows[single_row]
            detach_row(single_row)
            for i in list(col_rows.get(c, ())):
                remove_entry(i, c)
            rank += 1
            continue

        minlen = min(len(r) for r in rows.values())
        best = None
        for i, r in rows.items():
            if len(r) != minlen:
                continue
            for c, v in r.items():
                key = (abs(v) != 1, len(col_rows[c]), abs(v))
                if best is None or key < best[0]:
                    best = (key, i, c)
        _, pi, pc = best
        prow = detach_row(pi)
        pv = prow[pc]
        rank += 1
        for i in list(col_rows.get(pc, ())):
            r = rows[i]
            f = r[pc]
            for c in list(r):
                r[c] *= pv
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    if c not in r:
                        col_rows.setdefault(c, set()).add(i)
                    r[c] = nv
                elif c in r:
                    del r[c]
                    s = col_rows[c]
                    s.discard(i)
                    if not s:
                        del col_rows[c]
            if not r:
                del rows[i]
                continue
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                for c in r:
                    r[c] //= g
    return rank


def rank_dense_fraction(m: SparseIntMatrix) -> int:
    """Independent rank oracle: dense Gaussian elimination over exact rationals."""
    a = [[Fraction(v) for v in row] for row in m.to_dense()]
    nrows, ncols = m.nrows, m.ncols
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(nrows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def determinant(m: SparseIntMatrix) -> int:
    """Exact determinant (Bareiss fraction-free elimination, dense)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant needs a square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = [row[:] for row in m.to_dense()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: SparseIntMatrix) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Dense textbook algorithm; intended for the optional torsion report, not
    for large matrices.
    """
    a = m.to_dense()
    nrows, ncols = m.nrows, m.ncols
    factors: list[int] = []
    top = 0
    while top < min(nrows, ncols):
        pivot = None
        for r in range(top, nrows):
            for c in range(top, ncols):
                if a[r][c] and (pivot is None or abs(a[r][c]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (r, c)
        if pivot is None:
            break
        r0, c0 = pivot
        a[top], a[r0] = a[r0], a[top]
        for row in a:
            row[top], row[c0] = row[c0], row[top]
        dirty = True
        while dirty:
            dirty = False
            for r in range(top + 1, nrows):
                if a[r][top]:
                    q = a[r][top] // a[top][top]
                    for c in range(top, ncols):
                        a[r][c] -= q * a[top][c]
                    if a[r][top]:
                        a[top], a[r] = a[r], a[top]
                        dirty = True
            for c in range(top + 1, ncols):
                if a[top][c]:
                    q = a[top][c] // a[top][top]
                    for r in range(top, nrows):
                        a[r][c] -= q * a[r][top]
                    if a[top][c]:
                        for row in a:
                            row[top], row[c] = row[c], row[top]
                        dirty = True
        d = abs(a[top][top])
        # Enforce divisibility towards later entries.
        for r in range(top + 1, nrows):
            for c in range(top + 1, ncols):
                if a[r][c] % d:
                    for cc in range(top, ncols):
                        a[top][cc] += a[r][cc]
                    dirty = True
                    break
            if dirty:
                break
        if dirty:
            continue
        factors.append(d)
        top += 1
    return factors
