"""Matroids on the ground set {1..n}, their lattices of flats, and Bergman fans."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .fan import Fan
from .linalg import RationalMatrix, vector_rank

Flat = frozenset[int]


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: frozenset[frozenset[int]]
    provenance: str = "explicit-bases"

    def __post_init__(self):
        if not self.bases:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise MatroidError(f"bases have different sizes {sorted(sizes)}")
        ground = set(range(1, self.n + 1))
        for b in self.bases:
            if not b <= ground:
                raise MatroidError(f"basis {sorted(b)} is not inside the ground set 1..{self.n}")
        violation = _exchange_violation(self.bases)
        if violation is not None:
            b1, b2, x = violation
            raise MatroidError(
                f"basis exchange fails for {sorted(b1)} and {sorted(b2)} at element {x}"
            )

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @cached_property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def rank_of(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        return max(len(s & b) for b in self.bases)

    def closure(self, s: Iterable[int]) -> Flat:
        s = frozenset(s)
        r = self.rank_of(s)
        return frozenset(e for e in self.ground if e in s or self.rank_of(s | {e}) == r)

    def loops(self) -> frozenset[int]:
        return self.closure(())

    def coloops(self) -> frozenset[int]:
        return frozenset(e for e in self.ground if all(e in b for b in self.bases))

    def to_json(self) -> dict:
        return {"n": self.n, "bases": sorted(sorted(b) for b in self.bases)}


def _exchange_violation(bases: frozenset[frozenset[int]]):
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return b1, b2, x
    return None


def matroid_from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    return Matroid(int(n), frozenset(frozenset(int(e) for e in b) for b in bases), "explicit-bases")


def matroid_from_matrix(m: RationalMatrix | Sequence[Sequence]) -> Matroid:
    """Linear matroid of the columns; column j is ground element j+1."""
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    cols = m.transpose().rows
    n = len(cols)
    r = m.rank()
    bases = [frozenset(i + 1 for i in s) for s in combinations(range(n), r) if vector_rank([cols[i] for i in s]) == r]
    return Matroid(n, frozenset(bases), "linear")


def matroid_from_graph(edges: Sequence[Sequence]) -> Matroid:
    """Cycle matroid; edge k (0-based in the list) is ground element k+1."""
    edges = [tuple(e) for e in edges]
    verts = sorted({v for e in edges for v in e}, key=repr)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    r = len(verts) - len({find(v) for v in verts})

    def acyclic(subset) -> bool:
        par = {v: v for v in verts}

        def f(v):
            while par[v] != v:
                v = par[v]
            return v

        for k in subset:
            a, b = f(edges[k][0]), f(edges[k][1])
            if a == b:
                return False
            par[a] = b
        return True

    bases = [frozenset(k + 1 for k in s) for s in combinations(range(len(edges)), r) if acyclic(s)]
    return Matroid(len(edges), frozenset(bases), "graphic")


def uniform_matroid(r: int, n: int) -> Matroid:
    return Matroid(n, frozenset(frozenset(s) for s in combinations(range(1, n + 1), r)), "explicit-bases")


def matroid_from_json(data: Mapping) -> Matroid:
    if "bases" in data:
        return matroid_from_bases(data["n"], data["bases"])
    if "graph" in data:
        return matroid_from_graph(data["graph"])
    if "matrix" in data:
        return matroid_from_matrix(data["matrix"])
    raise MatroidError('matroid JSON needs one of "bases", "graph" or "matrix"')


def load_matroid(path) -> Matroid:
    with open(path) as fh:
        return matroid_from_json(json.load(fh))


@dataclass(frozen=True)
class FlatLattice:
    flats: tuple[tuple[Flat, ...], ...]  # grouped by rank
    covers: frozenset[tuple[Flat, Flat]]

    @property
    def bottom(self) -> Flat:
        return self.flats[0][0]

    @property
    def top(self) -> Flat:
        return self.flats[-1][0]

    def all_flats(self) -> list[Flat]:
        return [f for layer in self.flats for f in layer]

    def rank_of(self, flat: Flat) -> int:
        for r, layer in enumerate(self.flats):
            if flat in layer:
                return r
        raise KeyError(flat)

    def proper_part(self) -> list[Flat]:
        return [f for layer in self.flats[1:-1] for f in layer]


def _flat_key(f: Flat) -> tuple:
    return tuple(sorted(f))


def flats_lattice(m: Matroid) -> FlatLattice:
    """All flats, built upward by covers: the flats covering F are cl(F + e)."""
    bottom = m.closure(())
    layers = [[bottom]]
    covers = set()
    while layers[-1][0] != m.ground:
        nxt: set[Flat] = set()
        for f in layers[-1]:
            for e in sorted(m.ground - f):
                g = m.closure(f | {e})
                nxt.add(g)
                covers.add((f, g))
        layers.append(sorted(nxt, key=_flat_key))
    return FlatLattice(tuple(tuple(layer) for layer in layers), frozenset(covers))


def mobius_top(lattice: FlatLattice) -> int:
    """mu(bottom, top) from mu(0,0) = 1 and mu(0,x) = -sum_{y < x} mu(0,y)."""
    flats = lattice.all_flats()
    mu: dict[Flat, int] = {}
    for x in flats:  # rank order, so every y < x is already done
        if x == lattice.bottom:
            mu[x] = 1
        else:
            mu[x] = -sum(v for y, v in mu.items() if y < x)
    return mu[lattice.top]


def bergman_fan(m: Matroid) -> Fan:
    """Fine subdivision of the Bergman fan: one cone per chain of proper flats.

    Rays are the indicator vectors of the proper nonempty flats, and the
    lineality space is spanned by the all-ones vector.
    """
    if m.loops():
        raise MatroidError(f"loopless required (loops: {sorted(m.loops())})")
    lattice = flats_lattice(m)
    proper = lattice.proper_part()
    rays = [tuple(int(i in f) for i in range(1, m.n + 1)) for f in proper]
    index = {f: k for k, f in enumerate(proper)}
    chains: list[tuple[Flat, ...]] = [()]
    frontier: list[tuple[Flat, ...]] = [(f,) for f in proper]
    while frontier:
        chains += frontier
        frontier = [c + (g,) for c in frontier for g in proper if c[-1] < g]
    cones = sorted((frozenset(index[f] for f in c) for c in chains), key=lambda s: (len(s), sorted(s)))
    return Fan(m.n, rays, cones, [(1,) * m.n])
