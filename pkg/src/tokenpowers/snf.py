"""Smith normal form over the integers.

Everything is exact Python ints. Two routes:

* ``smith_normal_form(M, transforms=True)`` runs a dense reduction that
  records unimodular ``U``, ``V`` with ``U @ M @ V = D``.
* Without transforms, unit pivots are first eliminated sparsely (boundary
  matrices are mostly +-1 with a handful of entries per row) and only the
  leftover block goes through the dense reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Dense integer matrix stored as a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], cols: int | None = None):
        self.data = [[int(v) for v in row] for row in data]
        self.rows = len(self.data)
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        if any(len(r) != cols for r in self.data):
            raise ValueError("ragged matrix")
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        m = cls.zeros(k, k)
        for i in range(k):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_triplets(cls, rows: int, cols: int, triplets: Iterable[tuple[int, int, int]]):
        m = cls.zeros(rows, cols)
        for i, j, v in triplets:
            m.data[i][j] += v
        return m

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for i, row in enumerate(self.data) for j, v in enumerate(row) if v]

    def to_triplet_text(self) -> str:
        """``rows cols`` header, then one ``i j value`` line per nonzero entry."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{i} {j} {v}" for i, j, v in self.triplets()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> "IntMatrix":
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        rows, cols = map(int, lines[0])
        return cls.from_triplets(rows, cols, ((int(a), int(b), int(c)) for a, b, c in lines[1:]))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in ot]
                          for row in self.data], other.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.data)] if self.rows else [], self.rows)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.data, self.cols)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data and self.cols == other.cols

    def __repr__(self):
        return f"IntMatrix({self.data})"


@dataclass
class SNFResult:
    rank: int
    factors: list[int]  # all nonzero diagonal entries, d_1 | d_2 | ...
    D: IntMatrix | None = None
    U: IntMatrix | None = None
    V: IntMatrix | None = None

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.factors if d > 1]


@dataclass
class _Dense:
    a: list[list[int]]
    u: list[list[int]] | None = None
    v: list[list[int]] | None = None
    rows: int = field(init=False)
    cols: int = field(init=False)

    def __post_init__(self):
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            if self.u is not None:
                self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            if self.v is not None:
                for row in self.v:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, dst, src, k):
        """row[dst] += k * row[src]"""
        a = self.a
        rs, rd = a[src], a[dst]
        for c in range(self.cols):
            if rs[c]:
                rd[c] += k * rs[c]
        if self.u is not None:
            us, ud = self.u[src], self.u[dst]
            for c in range(len(us)):
                if us[c]:
                    ud[c] += k * us[c]

    def add_col(self, dst, src, k):
        """col[dst] += k * col[src]"""
        for row in self.a:
            if row[src]:
                row[dst] += k * row[src]
        if self.v is not None:
            for row in self.v:
                if row[src]:
                    row[dst] += k * row[src]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.u is not None:
            self.u[i] = [-x for x in self.u[i]]


def _dense_snf(work: _Dense) -> list[int]:
    """Diagonalize ``work.a`` in place; returns the diagonal entries."""
    a = work.a
    diag = []
    for s in range(min(work.rows, work.cols)):
        while True:
            # pivot: nonzero entry of least absolute value in the trailing block
            best = None
            for i in range(s, work.rows):
                row = a[i]
                for j in range(s, work.cols):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                return diag
            _, i, j = best
            work.swap_rows(s, i)
            work.swap_cols(s, j)
            p = a[s][s]
            clean = True
            for i in range(s + 1, work.rows):
                if a[i][s]:
                    work.add_row(i, s, -(a[i][s] // p))
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, work.cols):
                if a[s][j]:
                    work.add_col(j, s, -(a[s][j] // p))
                    clean = clean and a[s][j] == 0
            if not clean:
                continue
            # enforce divisibility of the rest of the block by the pivot
            bad = next((i for i in range(s + 1, work.rows)
                        if any(a[i][j] % p for j in range(s + 1, work.cols))), None)
            if bad is None:
                break
            work.add_row(s, bad, 1)
        if a[s][s] < 0:
            work.negate_row(s)
        diag.append(a[s][s])
    return diag


def _sparse_reduce(rows: list[dict[int, int]]) -> tuple[int, list[list[int]], int]:
    """Eliminate +-1 pivots. Returns (units eliminated, leftover rows, leftover col count)."""
    rows = [dict(r) for r in rows if r]
    alive = set(range(len(rows)))
    colmap: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            colmap.setdefault(c, set()).add(i)
    units = 0
    changed = True
    while changed:
        changed = False
        for i in sorted(alive, key=lambda k: len(rows[k])):
            if i not in alive:
                continue
            r = rows[i]
            cands = [c for c, v in r.items() if v in (1, -1)]
            if not cands:
                continue
            c = min(cands, key=lambda cc: (len(colmap[cc]), cc))
            p = r[c]
            for k in list(colmap[c]):
                if k == i:
                    continue
                rk = rows[k]
                f = rk[c] * p  # p = +-1 so rk[c] / p == rk[c] * p
                for cc, vv in r.items():
                    nv = rk.get(cc, 0) - f * vv
                    if nv:
                        if cc not in rk:
                            colmap[cc].add(k)
                        rk[cc] = nv
                    else:
                        if cc in rk:
                            del rk[cc]
                            colmap[cc].discard(k)
                if not rk:
                    alive.discard(k)
            for cc in r:
                colmap[cc].discard(i)
            alive.discard(i)
            units += 1
            changed = True
    left = sorted(alive)
    cols = sorted({c for i in left for c in rows[i]})
    cpos = {c: j for j, c in enumerate(cols)}
    dense = []
    for i in left:
        row = [0] * len(cols)
        for c, v in rows[i].items():
            row[cpos[c]] = v
        dense.append(row)
    return units, dense, len(cols)


def _normalize_chain(diag: list[int]) -> list[int]:
    """Turn any diagonal into invariant factors d_1 | d_2 | ..."""
    ds = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a * b // g
                    changed = True
    return sorted(ds)


def smith_normal_form(M, transforms: bool = False) -> SNFResult:
    """Smith normal form of an integer matrix.

    ``M`` may be an ``IntMatrix``, a list of row lists, or a list of sparse
    rows (dicts ``col -> value``). With ``transforms=True`` the result holds
    ``D``, ``U`` and ``V`` with ``U @ M @ V == D``.
    """
    if transforms:
        if not isinstance(M, IntMatrix):
            M = IntMatrix(M)
        work = _Dense([row[:] for row in M.data],
                      IntMatrix.identity(M.rows).data, IntMatrix.identity(M.cols).data)
        diag = _dense_snf(work)
        # the dense reduction already yields a divisibility chain
        return SNFResult(len(diag), list(diag), IntMatrix(work.a, M.cols),
                         IntMatrix(work.u, M.rows), IntMatrix(work.v, M.cols))
    if isinstance(M, IntMatrix):
        sparse = [{j: v for j, v in enumerate(row) if v} for row in M.data]
    elif M and isinstance(M[0], dict):
        sparse = [{c: v for c, v in r.items() if v} for r in M]
    else:
        sparse = [{j: v for j, v in enumerate(row) if v} for row in M]
    units, dense, _ = _sparse_reduce(sparse)
    diag = _dense_snf(_Dense(dense)) if dense else []
    factors = [1] * units + _normalize_chain(diag)
    return SNFResult(len(factors), factors)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = M.rows
    if n != M.cols:
        raise ValueError("square matrix required")
    a = [row[:] for row in M.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
