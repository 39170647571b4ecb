"""Example families: tree space, complete-intersection skeletons, hypersurfaces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import networkx as nx

from .complex import FacePoset, SimplicialComplex
from .fan import Fan, is_complete, link_poset, skeleton
from .linalg import dot
from .polytope import LaurentPolynomial, newton_polytope, normal_fan


@dataclass(frozen=True, order=True)
class Split:
    """Bipartition of the leaves {1..n}, stored by the side avoiding leaf n."""

    n: int
    side: frozenset[int]

    def __post_init__(self):
        leaves = frozenset(range(1, self.n + 1))
        side = frozenset(self.side)
        if not side <= leaves:
            raise ValueError(f"split side {sorted(side)} is not a set of leaves 1..{self.n}")
        if self.n in side:
            side = leaves - side
        if not 2 <= len(side) <= self.n - 2:
            raise ValueError(f"split {sorted(side)} | rest needs at least two leaves on each side")
        object.__setattr__(self, "side", side)

    @property
    def other(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.side

    def __str__(self) -> str:
        return "".join(map(str, sorted(self.side))) + "|" + "".join(map(str, sorted(self.other)))

    def sort_key(self) -> tuple:
        return (len(self.side), sorted(self.side))


def splits_compatible(s1: Split, s2: Split) -> bool:
    if s1.n != s2.n:
        raise ValueError(f"splits on {s1.n} and {s2.n} leaves cannot be compared")
    a, ac, b, bc = s1.side, s1.other, s2.side, s2.other
    return not (a & b and a & bc and ac & b and ac & bc)


def all_splits(n: int) -> list[Split]:
    out = [Split(n, frozenset(c)) for k in range(2, n - 1) for c in combinations(range(1, n), k)]
    return sorted(out, key=Split.sort_key)


def tree_space_link(n: int) -> SimplicialComplex:
    """Flag complex of pairwise compatible splits (the link of tree space)."""
    if n < 4:
        raise ValueError("tree space link needs n >= 4 leaves")
    splits = all_splits(n)
    g = nx.Graph()
    g.add_nodes_from(range(len(splits)))
    g.add_edges_from((i, j) for i, j in combinations(range(len(splits)), 2) if splits_compatible(splits[i], splits[j]))
    facets = [[splits[i] for i in sorted(c)] for c in nx.find_cliques(g)]
    return SimplicialComplex(facets, vertices=splits)


def splits_from_json(data) -> list[Split]:
    """Read ``{"n": n, "splits": [[leaves], ...]}``."""
    n = int(data["n"])
    return [Split(n, frozenset(int(x) for x in side)) for side in data["splits"]]


def splits_to_json(splits: Sequence[Split]) -> dict:
    if not splits:
        raise ValueError("need at least one split to infer n")
    return {"n": splits[0].n, "splits": [sorted(s.side) for s in splits]}


def split_metric(s: Split) -> tuple[int, ...]:
    """Split pseudometric on pairs i<j: 1 when the split separates i and j."""
    return tuple(int((i in s.side) != (j in s.side)) for i, j in combinations(range(1, s.n + 1), 2))


def projective_space_fan(r: int) -> Fan:
    """Fan of P^r: rays e_1..e_r and -(e_1+...+e_r); cones on proper ray subsets."""
    if r < 1:
        raise ValueError("P^r needs r >= 1")
    rays = [tuple(int(i == j) for j in range(r)) for i in range(r)] + [tuple(-1 for _ in range(r))]
    cones = [frozenset(c) for k in range(r + 1) for c in combinations(range(r + 1), k)]
    return Fan(r, rays, cones)


def product_fan(f: Fan, g: Fan) -> Fan:
    rf, rg = f.ambient_rank, g.ambient_rank
    rays = [r + (0,) * rg for r in f.rays] + [(0,) * rf + r for r in g.rays]
    lin = [v + (0,) * rg for v in f.lineality] + [(0,) * rf + v for v in g.lineality]
    off = len(f.rays)
    pairs = list(product(range(len(f.cones)), range(len(g.cones))))
    cones = [f.cones[a] | frozenset(k + off for k in g.cones[b]) for a, b in pairs]
    idx = {p: i for i, p in enumerate(pairs)}
    face_pairs = []
    for (a, b), j in idx.items():
        for a2 in f.faces[a] | {a}:
            for b2 in g.faces[b] | {b}:
                if (a2, b2) != (a, b):
                    face_pairs.append((idx[(a2, b2)], j))
    return Fan(rf + rg, rays, cones, lin, face_pairs)


def ci_skeleton_link(complete_fan: Fan, c: int) -> FacePoset:
    """Link of a general codimension-c complete intersection's tropical variety."""
    r = complete_fan.ambient_rank
    if not 1 <= c <= r:
        raise ValueError(f"codimension {c} out of range 1..{r}")
    if not is_complete(complete_fan):
        raise ValueError("fan is not complete")
    return link_poset(skeleton(complete_fan, c))


def tropical_hypersurface_fan(f: LaurentPolynomial) -> Fan:
    if len(f) < 2:
        raise ValueError("tropical hypersurface of a monomial is empty")
    return skeleton(normal_fan(newton_polytope(f)), 1)


def initial_form(f: LaurentPolynomial, w: Sequence[int]) -> LaurentPolynomial:
    """Terms of ``f`` whose exponent minimises the ``w``-weight."""
    if len(w) != f.nvars:
        raise ValueError(f"weight has length {len(w)}, polynomial has {f.nvars} variables")
    weights = {e: dot(w, e) for e in f.terms}
    low = min(weights.values())
    return LaurentPolynomial({e: c for e, c in f.terms.items() if weights[e] == low})


def in_tropical_hypersurface(f: LaurentPolynomial, w: Sequence[int]) -> bool:
    return len(initial_form(f, w)) >= 2
