"""Face posets, simplicial and Delta-complexes, and rational homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Hashable, Iterable, Mapping, Sequence

from .linalg import RationalMatrix, integer_rank

SparseRows = tuple[dict, ...]  # row index -> {col: value}


class FacePoset:
    """Finite poset whose elements carry a cell dimension.

    ``relations`` may be any set of pairs ``(lower, upper)`` generating the
    order; covers are recovered by transitive reduction.  Element order is
    kept as given, which fixes vertex order in derived complexes.
    """

    def __init__(self, elements: Iterable[tuple[Hashable, int]], relations: Iterable[tuple[Hashable, Hashable]] = ()):
        elems = list(elements)
        self.elements: tuple[Hashable, ...] = tuple(e for e, _ in elems)
        self.dims: dict[Hashable, int] = {e: int(d) for e, d in elems}
        if len(self.dims) != len(self.elements):
            raise ValueError("duplicate poset element ids")
        self.index = {e: i for i, e in enumerate(self.elements)}
        up: dict[Hashable, set] = {e: set() for e in self.elements}
        for lo, hi in relations:
            if lo not in self.dims or hi not in self.dims:
                raise ValueError(f"relation ({lo!r}, {hi!r}) mentions an unknown element")
            if self.dims[lo] >= self.dims[hi]:
                raise ValueError(f"cell dimension must increase along ({lo!r}, {hi!r})")
            up[lo].add(hi)
        # dims strictly increase, so processing by decreasing dim gives the closure
        above: dict[Hashable, frozenset] = {}
        for e in sorted(self.elements, key=lambda x: -self.dims[x]):
            acc = set(up[e])
            for h in up[e]:
                acc |= above[h]
            above[e] = frozenset(acc)
        self.above = above
        below: dict[Hashable, set] = {e: set() for e in self.elements}
        for e, hs in above.items():
            for h in hs:
                below[h].add(e)
        self.below = {e: frozenset(s) for e, s in below.items()}
        covers = set()
        for e in self.elements:
            for h in above[e]:
                if not any(h in above[m] for m in above[e]):
                    covers.add((e, h))
        self.covers = frozenset(covers)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FacePoset({len(self)} elements, {len(self.covers)} covers)"

    def less(self, a, b) -> bool:
        return b in self.above[a]

    def maximal_elements(self) -> list:
        return [e for e in self.elements if not self.above[e]]

    def minimal_elements(self) -> list:
        return [e for e in self.elements if not self.below[e]]

    @property
    def dimension(self) -> int:
        return max(self.dims.values(), default=-1)

    def upper_covers(self, e) -> list:
        return sorted((h for lo, h in self.covers if lo == e), key=self.index.__getitem__)

    def maximal_chains(self) -> list[tuple]:
        ups: dict[Hashable, list] = {e: [] for e in self.elements}
        for lo, hi in self.covers:
            ups[lo].append(hi)
        for e in ups:
            ups[e].sort(key=self.index.__getitem__)
        chains = []
        stack = [(m,) for m in reversed(self.minimal_elements())]
        while stack:
            ch = stack.pop()
            nxt = ups[ch[-1]]
            if not nxt:
                chains.append(ch)
            for h in reversed(nxt):
                stack.append(ch + (h,))
        return chains

    def restrict(self, keep: Iterable[Hashable]) -> FacePoset:
        keep = set(keep)
        elems = [(e, self.dims[e]) for e in self.elements if e in keep]
        rels = [(lo, hi) for lo, hi in self.covers if lo in keep and hi in keep]
        # covers of the subposet may skip removed elements
        rels += [(lo, hi) for lo in keep for hi in self.above[lo] if hi in keep]
        return FacePoset(elems, rels)

    def isomorphic_labelled(self, other: FacePoset) -> bool:
        return set(self.elements) == set(other.elements) and self.covers == other.covers and self.dims == other.dims


def _sort_key(v):
    return (type(v).__name__, repr(v)) if not isinstance(v, (int, str)) else ((0, v) if isinstance(v, int) else (1, v))


class SimplicialComplex:
    """Abstract simplicial complex stored by its facets."""

    def __init__(self, facets: Iterable[Iterable[Hashable]], vertices: Iterable[Hashable] | None = None):
        facet_sets = [frozenset(f) for f in facets]
        facet_sets = [f for f in facet_sets if f]
        used = set().union(*facet_sets) if facet_sets else set()
        if vertices is None:
            verts = sorted(used, key=_sort_key)
        else:
            verts = list(dict.fromkeys(vertices))
            missing = used - set(verts)
            if missing:
                raise ValueError(f"facets use undeclared vertices {sorted(missing, key=_sort_key)}")
            facet_sets += [frozenset([v]) for v in verts if v not in used]
        self.vertices: tuple[Hashable, ...] = tuple(verts)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        idx = {tuple(sorted(self.index[v] for v in f)) for f in facet_sets}
        ordered = sorted(idx, key=lambda t: (-len(t), t))
        maximal: list[tuple[int, ...]] = []
        covered: set[tuple[int, ...]] = set()
        for f in ordered:
            if f in covered:
                continue
            maximal.append(f)
            for size in range(1, len(f)):
                covered.update(combinations(f, size))
        self.facets: tuple[tuple[int, ...], ...] = tuple(sorted(maximal, key=lambda t: (len(t), t)))
        self._faces: list[list[tuple[int, ...]]] | None = None

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, f={self.f_vector()})"

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, k: int | None = None):
        """All faces as sorted vertex-index tuples; by dimension if ``k`` is given."""
        if self._faces is None:
            seen: list[set] = [set() for _ in range(self.dimension + 1)]
            for f in self.facets:
                for size in range(1, len(f) + 1):
                    seen[size - 1].update(combinations(f, size))
            self._faces = [sorted(s) for s in seen]
        if k is None:
            return [f for layer in self._faces for f in layer]
        if k < 0 or k > self.dimension:
            return []
        return self._faces[k]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dimension + 1))

    def labelled_facets(self) -> set[frozenset]:
        return {frozenset(self.vertices[i] for i in f) for f in self.facets}

    def is_empty(self) -> bool:
        return not self.vertices

    def chain_complex(self) -> ChainComplex:
        """Augmented simplicial chain complex, lowest degree -1."""
        d = self.dimension
        if d < 0:
            return ChainComplex((1,), {}, offset=-1)
        ranks = [1] + [len(self.faces(k)) for k in range(d + 1)]
        diffs: dict[int, SparseRows] = {0: ({j: 1 for j in range(ranks[1])},)}
        for k in range(1, d + 1):
            pos = {f: i for i, f in enumerate(self.faces(k - 1))}
            rows: list[dict] = [{} for _ in range(len(pos))]
            for j, f in enumerate(self.faces(k)):
                for i in range(k + 1):
                    rows[pos[f[:i] + f[i + 1:]]][j] = -1 if i % 2 else 1
            diffs[k] = tuple(rows)
        return ChainComplex(tuple(ranks), diffs, offset=-1)

    def face_poset(self) -> FacePoset:
        faces = self.faces()
        elems = [(f, len(f) - 1) for f in faces]
        rels = [(f[:i] + f[i + 1:], f) for f in faces if len(f) > 1 for i in range(len(f))]
        return FacePoset(elems, rels)


class DeltaComplex:
    """Delta-complex given by cells per dimension and signed facet lists.

    A ``j``-cell lists exactly ``j + 1`` facets as ``(facet_id, sign)``.  Signs
    are trusted only after ``d . d == 0`` has been checked.
    """

    def __init__(self, cells: Sequence[Sequence[Hashable]], boundary: Mapping[Hashable, Sequence[tuple[Hashable, int]]]):
        self.cells: tuple[tuple[Hashable, ...], ...] = tuple(tuple(layer) for layer in cells)
        while self.cells and not self.cells[-1]:
            self.cells = self.cells[:-1]
        self.dim_of: dict[Hashable, int] = {}
        for d, layer in enumerate(self.cells):
            for c in layer:
                if c in self.dim_of:
                    raise ValueError(f"cell id {c!r} used twice")
                self.dim_of[c] = d
        self.boundary: dict[Hashable, tuple[tuple[Hashable, int], ...]] = {}
        for c, d in self.dim_of.items():
            facets = tuple((f, int(s)) for f, s in boundary.get(c, ()))
            if d == 0:
                if facets:
                    raise ValueError(f"vertex {c!r} cannot have a boundary")
                continue
            if len(facets) != d + 1:
                raise ValueError(f"{d}-cell {c!r} has {len(facets)} facets, expected {d + 1}")
            for f, s in facets:
                if self.dim_of.get(f) != d - 1:
                    raise ValueError(f"facet {f!r} of {c!r} is not a {d - 1}-cell")
                if s not in (1, -1):
                    raise ValueError(f"incidence sign {s} on {c!r} must be +1 or -1")
            self.boundary[c] = facets
        extra = set(boundary) - set(self.dim_of)
        if extra:
            raise ValueError(f"boundary given for unknown cells {sorted(map(repr, extra))}")

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.cells)

    def is_empty(self) -> bool:
        return not self.dim_of

    def chain_complex(self) -> ChainComplex:
        d = self.dimension
        if d < 0:
            return ChainComplex((1,), {}, offset=-1)
        ranks = [1] + [len(layer) for layer in self.cells]
        diffs: dict[int, SparseRows] = {0: ({j: 1 for j in range(ranks[1])},)}
        for k in range(1, d + 1):
            pos = {c: i for i, c in enumerate(self.cells[k - 1])}
            rows: list[dict] = [{} for _ in pos]
            for j, c in enumerate(self.cells[k]):
                for f, s in self.boundary[c]:
                    r = rows[pos[f]]
                    v = r.get(j, 0) + s
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
            diffs[k] = tuple(rows)
        return ChainComplex(tuple(ranks), diffs, offset=-1)

    def to_json(self) -> dict:
        return {
            "cells": [[str(c) for c in layer] for layer in self.cells],
            "boundary": {str(c): [[str(f), s] for f, s in b] for c, b in self.boundary.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> DeltaComplex:
        cells = [[str(c) for c in layer] for layer in data["cells"]]
        boundary = {str(c): [(str(f), int(s)) for f, s in b] for c, b in data.get("boundary", {}).items()}
        return cls(cells, boundary)


@dataclass(frozen=True)
class ChainComplex:
    """Finite chain complex of Q-vector spaces.

    ``differentials[d]`` is the map ``C_d -> C_{d-1}`` stored as sparse rows
    (one ``{column: value}`` dict per basis element of ``C_{d-1}``).  Degrees
    run from ``offset`` to ``offset + len(ranks) - 1``; missing differentials
    are zero.
    """

    ranks: tuple[int, ...]
    differentials: Mapping[int, SparseRows] = field(default_factory=dict)
    offset: int = 0

    @classmethod
    def from_matrices(cls, ranks: Sequence[int], matrices: Mapping[int, RationalMatrix], offset: int = 0) -> ChainComplex:
        diffs = {}
        for d, m in matrices.items():
            lo, hi = ranks[d - 1 - offset], ranks[d - offset]
            if m.shape != (lo, hi):
                raise ValueError(f"differential in degree {d} has shape {m.shape}, expected {(lo, hi)}")
            diffs[d] = tuple(m.sparse_rows())
        return cls(tuple(ranks), diffs, offset)

    @property
    def top(self) -> int:
        return self.offset + len(self.ranks) - 1

    def rank_at(self, d: int) -> int:
        i = d - self.offset
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def matrix(self, d: int) -> RationalMatrix:
        """Dense copy of the differential out of degree ``d``."""
        lo, hi = self.rank_at(d - 1), self.rank_at(d)
        rows = self.differentials.get(d, ())
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in r.items()}
        out = [[Fraction(0)] * hi for _ in range(lo)]
        for (i, j), v in entries.items():
            out[i][j] = Fraction(v)
        return RationalMatrix(out, ncols=hi)

    def differential_rank(self, d: int) -> int:
        rows = self.differentials.get(d, ())
        return integer_rank([_as_int_row(r) for r in rows if r])

    def check_d_squared(self) -> None:
        for d in range(self.offset + 2, self.top + 1):
            outer = self.differentials.get(d - 1, ())
            inner = self.differentials.get(d, ())
            if not outer or not inner:
                continue
            for i, row in enumerate(outer):
                acc: dict[int, Fraction] = {}
                for k, v in row.items():
                    for j, w in inner[k].items():
                        acc[j] = acc.get(j, 0) + v * w
                if any(acc.values()):
                    raise ValueError(f"boundary maps do not compose to zero in degree {d} (row {i})")


def _as_int_row(row: dict) -> dict[int, int]:
    if all(isinstance(v, int) for v in row.values()):
        return row
    den = lcm(*(Fraction(v).denominator for v in row.values()))
    return {j: int(Fraction(v) * den) for j, v in row.items()}


def homology_of_chain_complex(cc: ChainComplex) -> list[int]:
    """Dimensions of H_d over Q, for d from ``cc.offset`` to ``cc.top``."""
    cc.check_d_squared()
    ranks = {d: cc.differential_rank(d) for d in range(cc.offset, cc.top + 2)}
    return [cc.rank_at(d) - ranks[d] - ranks[d + 1] for d in range(cc.offset, cc.top + 1)]


def reduced_betti(c: SimplicialComplex | DeltaComplex) -> list[int]:
    """Reduced rational Betti numbers in degrees 0..dim.

    The empty complex gives ``[]``; its only reduced homology sits in degree
    -1 (see :func:`reduced_betti_minus_one`).
    """
    try:
        h = homology_of_chain_complex(c.chain_complex())
    except ValueError as exc:
        raise ValueError("invalid boundary data") from exc
    return h[1:]


def reduced_betti_minus_one(c: SimplicialComplex | DeltaComplex) -> int:
    return 1 if c.is_empty() else 0


def reduced_euler_characteristic(c: SimplicialComplex | DeltaComplex) -> int:
    return -1 + sum((-1) ** i * n for i, n in enumerate(c.f_vector()))


def is_top_concentrated(betti: Sequence[int]) -> bool:
    return all(b == 0 for b in betti[:-1])


def order_complex(p: FacePoset) -> SimplicialComplex:
    return SimplicialComplex(p.maximal_chains(), vertices=p.elements)


def barycentric_subdivision(c: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertices are the faces of ``c``."""
    poset = c.face_poset()
    sub = order_complex(poset)
    relabel = {f: tuple(c.vertices[i] for i in f) for f in poset.elements}
    return SimplicialComplex(
        [[relabel[sub.vertices[i]] for i in facet] for facet in sub.facets],
        vertices=[relabel[f] for f in poset.elements],
    )


def cone_over(c: SimplicialComplex, apex: Hashable = "apex") -> SimplicialComplex:
    if apex in c.index:
        raise ValueError("apex label already used")
    facets = [[c.vertices[i] for i in f] + [apex] for f in c.facets] or [[apex]]
    return SimplicialComplex(facets, vertices=list(c.vertices) + [apex])
