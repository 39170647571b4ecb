"""Rational polyhedral cones given by rays plus a lineality space."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from . import fm
from .linalg import IntVector, as_rational, dot, nullspace, primitive, row_space_basis, solve, vector_rank


@dataclass(frozen=True)
class Cone:
    """``cone(rays) + span(lineality)``.

    Rays are kept exactly as given; :class:`~troplink.fan.Fan` is responsible
    for making them primitive and checking they avoid the lineality span.
    """

    rays: tuple[IntVector, ...]
    lineality: tuple[IntVector, ...] = ()
    ambient_rank: int = field(default=-1)

    def __post_init__(self):
        if self.ambient_rank < 0:
            vecs = self.rays + self.lineality
            if not vecs:
                raise ValueError("ambient rank needed for a cone with no generators")
            object.__setattr__(self, "ambient_rank", len(vecs[0]))

    @cached_property
    def lineality_dim(self) -> int:
        return vector_rank(self.lineality)

    @cached_property
    def dim(self) -> int:
        return vector_rank(self.rays + self.lineality)

    def relint_point(self) -> tuple[Fraction, ...]:
        """Sum of the rays plus the sum of the lineality basis."""
        pt = [Fraction(0)] * self.ambient_rank
        for v in self.rays + self.lineality:
            pt = [a + b for a, b in zip(pt, v)]
        return tuple(pt)

    def contains(self, w: Sequence) -> bool:
        """Exact membership, by covering the cone with simplicial subcones.

        Any point of the cone lies in a subcone spanned by rays that form a
        basis modulo the lineality space (conic Caratheodory), so it is enough
        to solve one square-ish system per such ray subset.
        """
        w = [as_rational(x) for x in w]
        if len(w) != self.ambient_rank:
            raise ValueError("point has wrong length")
        lin = list(self.lineality)
        k = self.dim - self.lineality_dim
        if k == 0:
            return _in_span(lin, w)
        if not _in_span(list(self.rays) + lin, w):
            return False
        nl = len(lin)
        for subset in combinations(self.rays, k):
            cols = list(subset) + lin
            if vector_rank(cols) != k + self.lineality_dim:
                continue
            x = solve(cols, w)
            if x is not None and all(c >= 0 for c in x[:k]):
                return True
        return False

    @cached_property
    def _hrep(self) -> tuple[tuple[IntVector, ...], tuple[IntVector, ...], tuple[frozenset[int], ...]]:
        n = self.ambient_rank
        gens = list(self.rays) + list(self.lineality)
        eqs = [primitive(u) for u in nullspace(gens, n)] if gens else [
            tuple(int(i == j) for j in range(n)) for i in range(n)
        ]
        basis = row_space_basis(gens) if gens else []
        k = self.dim - self.lineality_dim
        found: dict[frozenset[int], IntVector] = {}
        if k >= 1:
            for subset in combinations(range(len(self.rays)), k - 1):
                vecs = [self.rays[i] for i in subset] + list(self.lineality)
                if vector_rank(vecs) != k - 1 + self.lineality_dim:
                    continue
                coeffs = nullspace([[dot(v, b) for b in basis] for v in vecs], len(basis))
                if len(coeffs) != 1:
                    continue
                u = [sum(c * b[i] for c, b in zip(coeffs[0], basis)) for i in range(n)]
                u = list(primitive(u))
                vals = [dot(u, r) for r in self.rays]
                if all(v >= 0 for v in vals):
                    pass
                elif all(v <= 0 for v in vals):
                    u = [-x for x in u]
                    vals = [-v for v in vals]
                else:
                    continue
                zero = frozenset(i for i, v in enumerate(vals) if v == 0)
                if len(zero) == len(self.rays):
                    continue
                found.setdefault(zero, tuple(u))
        keys = sorted(found, key=lambda z: sorted(z))
        return tuple(eqs), tuple(found[z] for z in keys), tuple(keys)

    @property
    def equations(self) -> tuple[IntVector, ...]:
        """Normals ``u`` with ``u . x == 0`` on the cone (its span's complement)."""
        return self._hrep[0]

    @property
    def facet_normals(self) -> tuple[IntVector, ...]:
        """Inward facet normals ``u`` with ``u . x >= 0`` on the cone."""
        return self._hrep[1]

    @property
    def facet_ray_sets(self) -> tuple[frozenset[int], ...]:
        """For each facet, the indices of the rays lying on it."""
        return self._hrep[2]

    def face_ray_sets(self) -> set[frozenset[int]]:
        """Ray-index sets of all faces (the lineality face is the empty set)."""
        faces = {frozenset(range(len(self.rays)))}
        frontier = set(self.facet_ray_sets)
        while frontier:
            faces |= frontier
            frontier = {a & b for a in frontier for b in self.facet_ray_sets} - faces
        if self.dim > self.lineality_dim:
            faces.add(frozenset())
        return faces

    def is_face(self, ray_subset: Sequence[int]) -> bool:
        """Is ``cone(rays[ray_subset]) + lineality`` a face of this cone?

        Decided by Fourier-Motzkin: look for a functional vanishing on the
        subset and the lineality, and at least 1 on every other ray.
        """
        sub = set(ray_subset)
        n = self.ambient_rank
        equations = [(v, 0) for i, v in enumerate(self.rays) if i in sub]
        equations += [(v, 0) for v in self.lineality]
        cons = [fm.Constraint.ge(v, 1) for i, v in enumerate(self.rays) if i not in sub]
        return fm.feasible(n, cons, equations)


def _in_span(vectors, w) -> bool:
    if not vectors:
        return not any(w)
    return solve(vectors, w) is not None


def relints_meet(a: Cone, b: Cone) -> bool:
    """Do the relative interiors of two cones intersect?

    Solves ``sum la_i r_i - sum mu_j s_j + lineality terms == 0`` with every
    ``la_i, mu_j >= 1`` (homogeneous, so >= 1 is as good as > 0).
    """
    n = a.ambient_rank
    gens = [(r, 1) for r in a.rays] + [(s, -1) for s in b.rays]
    lin = list(a.lineality) + list(b.lineality)
    nv = len(gens) + len(lin)
    equations = []
    for i in range(n):
        row = [sgn * v[i] for v, sgn in gens] + [v[i] for v in lin]
        equations.append((row, 0))
    cons = []
    for j in range(len(gens)):
        row = [0] * nv
        row[j] = 1
        cons.append(fm.Constraint.ge(row, 1))
    return fm.feasible(nv, cons, equations)
