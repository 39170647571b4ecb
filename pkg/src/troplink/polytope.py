"""Lattice polytopes, Laurent polynomials and normal fans (min convention).

The normal cone of a face F is the set of weights ``w`` whose minimum over
the polytope is attained exactly on F.  This is the only convention used in
the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import fm
from .cone import Cone
from .fan import Fan
from .linalg import IntVector, as_rational, nullspace, primitive


def convex_hull_vertices(points: Iterable[Sequence[int]]) -> list[IntVector]:
    """Vertices of the convex hull, in lexicographic order.

    ``p`` is a vertex iff some weight is strictly smaller on ``p`` than on
    every other point, which is an exact feasibility question.
    """
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    r = len(pts[0])
    if any(len(p) != r for p in pts):
        raise ValueError("points have mixed dimensions")
    if len(pts) == 1:
        return pts
    out = []
    for p in pts:
        cons = [fm.Constraint.ge([qi - pi for qi, pi in zip(q, p)], 1) for q in pts if q != p]
        if fm.feasible(r, cons):
            out.append(p)
    return out


@dataclass(frozen=True)
class LatticePolytope:
    points: tuple[IntVector, ...]

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if not pts:
            raise ValueError("polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points have mixed dimensions")
        object.__setattr__(self, "points", pts)

    @property
    def ambient_rank(self) -> int:
        return len(self.points[0])

    @cached_property
    def vertices(self) -> tuple[IntVector, ...]:
        return tuple(convex_hull_vertices(self.points))

    @cached_property
    def _homogenized(self) -> Cone:
        return Cone(tuple((1,) + v for v in self.vertices), (), self.ambient_rank + 1)

    @property
    def dimension(self) -> int:
        return self._homogenized.dim - 1

    def facets(self) -> list[tuple[IntVector, frozenset[int]]]:
        """Inner normals of the facets with the vertex indices on each facet.

        Normals are primitive and only defined modulo the normal fan's
        lineality space.
        """
        out = []
        for u, zero in zip(self._homogenized.facet_normals, self._homogenized.facet_ray_sets):
            if not zero:
                continue
            out.append((primitive(u[1:]), zero))
        return out

    def to_json(self) -> dict:
        return {"ambient_rank": self.ambient_rank, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: Mapping) -> LatticePolytope:
        pts = [tuple(p) for p in data["points"]]
        if "ambient_rank" in data and any(len(p) != int(data["ambient_rank"]) for p in pts):
            raise ValueError("point length does not match ambient_rank")
        return cls(tuple(pts))


def normal_fan(p: LatticePolytope) -> Fan:
    """Complete fan of normal cones, one per nonempty face of ``p``."""
    r = p.ambient_rank
    verts = p.vertices
    direction = [[a - b for a, b in zip(v, verts[0])] for v in verts[1:]]
    direction = [d for d in direction if any(d)]
    lineality = [primitive(u) for u in nullspace(direction, r)] if direction else [
        tuple(int(i == j) for j in range(r)) for i in range(r)
    ]
    facets = p.facets()
    rays = sorted({u for u, _ in facets})
    ray_index = {u: i for i, u in enumerate(rays)}
    on_facet = [(ray_index[u], zero) for u, zero in facets]

    # faces as vertex sets: the polytope plus all intersections of facets
    all_verts = frozenset(range(len(verts)))
    faces = {all_verts}
    frontier = {z for _, z in on_facet}
    while frontier:
        faces |= frontier
        frontier = {a & b for a in frontier for _, b in on_facet} - faces
    faces.discard(frozenset())

    cones = []
    for face in faces:
        cones.append(frozenset(k for k, z in on_facet if face <= z))
    order = sorted(range(len(cones)), key=lambda i: (len(cones[i]), sorted(rays[k] for k in cones[i])))
    cones = [cones[i] for i in order]
    return Fan(r, rays, cones, lineality)


Monomial = tuple[int, ...]


class LaurentPolynomial:
    """Finite sum of ``coefficient * x^exponent`` with exact coefficients."""

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable[tuple[Sequence[int], object]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for exp, coeff in items:
            e = tuple(int(x) for x in exp)
            acc[e] = acc.get(e, Fraction(0)) + as_rational(coeff)
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            raise ValueError("a Laurent polynomial needs at least one nonzero term")
        if len({len(e) for e in acc}) != 1:
            raise ValueError("exponent vectors have different lengths")
        self.terms: dict[Monomial, Fraction] = dict(sorted(acc.items(), reverse=True))

    @property
    def nvars(self) -> int:
        return len(next(iter(self.terms)))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"

    def __str__(self) -> str:
        parts = []
        for exp, c in self.terms.items():
            mon = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e)
            mag = abs(c)
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def newton_polytope(f: LaurentPolynomial) -> LatticePolytope:
    return LatticePolytope(tuple(f.terms))


def polytope_from_file(path) -> LatticePolytope:
    with open(path) as fh:
        return LatticePolytope.from_json(json.load(fh))
