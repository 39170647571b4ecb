"""Exact rational linear algebra.

Everything is carried in Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
IntVector = tuple[int, ...]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence) -> IntVector:
    """Scale ``v`` to the primitive integer vector on the same ray.

    Rational entries are cleared of denominators first, so this also gives the
    primitive lattice vector along a rational direction.
    """
    vals = [as_rational(x) for x in v]
    if not any(vals):
        raise ValueError("zero vector has no primitive form")
    den = lcm(*(x.denominator for x in vals))
    ints = [int(x * den) for x in vals]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


class RationalMatrix:
    """Dense, immutable matrix of exact rationals."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("matrix rows have different lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"expected {ncols} columns, got {width}")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RationalMatrix:
        zero = Fraction(0)
        return cls(((zero,) * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def from_sparse(cls, nrows: int, ncols: int, entries: dict[tuple[int, int], int]) -> RationalMatrix:
        zero = Fraction(0)
        rows = [[zero] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            rows[i][j] = Fraction(v)
        return cls(rows, ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: [{body}])"

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(zip(*self._rows), ncols=self.nrows) if self.nrows else RationalMatrix.zeros(self.ncols, 0)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self.sparse_rows(), other.sparse_rows()
        out = []
        for row in a:
            acc: dict[int, Fraction] = {}
            for k, v in row.items():
                for j, w in b[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out.append([acc.get(j, Fraction(0)) for j in range(other.ncols)])
        return RationalMatrix(out, ncols=other.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [{j: x for j, x in enumerate(r) if x} for r in self._rows]

    def rank(self) -> int:
        return rank(self)


def _integer_rows(m: RationalMatrix) -> list[dict[int, int]]:
    out = []
    for row in m.sparse_rows():
        if not row:
            continue
        den = lcm(*(x.denominator for x in row.values()))
        out.append({j: int(x * den) for j, x in row.items()})
    return out


def integer_rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as ``{col: value}`` rows.

    Fraction-free elimination: a row is reduced as ``p*row - a*pivot_row`` and
    then divided by the gcd of its entries, so everything stays integral and
    small.  Pivots are chosen by a deterministic Markowitz rule (shortest row,
    then its sparsest column, ties broken by index) to limit fill-in.
    """
    active = {i: dict(r) for i, r in enumerate(rows) if r}
    cols: dict[int, set[int]] = {}
    for i, r in active.items():
        for c in r:
            cols.setdefault(c, set()).add(i)
    heap = [(len(r), i) for i, r in active.items()]
    heapq.heapify(heap)
    rk = 0
    while heap:
        size, pi = heapq.heappop(heap)
        if pi not in active or len(active[pi]) != size:
            continue  # stale entry
        prow = active.pop(pi)
        for c in prow:
            cols[c].discard(pi)
        pc = min(prow, key=lambda c: (len(cols[c]), c))
        pv = prow[pc]
        for k in sorted(cols[pc]):
            row = active[k]
            a = row[pc]
            g = gcd(pv, a)
            mp, ma = pv // g, a // g
            new = {c: mp * v for c, v in row.items()} if mp != 1 else dict(row)
            for c, v in prow.items():
                nv = new.get(c, 0) - ma * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            for c in row:
                if c not in new:
                    cols[c].discard(k)
            for c in new:
                if c not in row:
                    cols.setdefault(c, set()).add(k)
            if new:
                h = gcd(*new.values())
                if h != 1:
                    new = {c: v // h for c, v in new.items()}
                active[k] = new
                heapq.heappush(heap, (len(new), k))
            else:
                del active[k]
        rk += 1
    return rk


def rank(m: RationalMatrix) -> int:
    """Exact rank of ``m`` over the rationals."""
    return integer_rank(_integer_rows(m))


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with Fraction arithmetic; small systems only."""
    a = [[as_rational(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def vector_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return integer_rank(_integer_rows(RationalMatrix(vectors)))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -red[r][f]
        basis.append(x)
    return basis


def row_space_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    red, _ = rref(vectors)
    return red


def solve(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """One solution ``x`` of ``sum_j x_j * columns[j] == target``, or None.

    Free variables are set to zero.
    """
    n = len(target)
    k = len(columns)
    aug = [[as_rational(columns[j][i]) for j in range(k)] + [as_rational(target[i])] for i in range(n)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        x[pc] = red[r][k]
    return x


def in_span(vectors: Sequence[Sequence], w: Sequence) -> bool:
    if not vectors:
        return not any(as_rational(x) for x in w)
    return solve(vectors, w) is not None
