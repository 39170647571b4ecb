"""Rational polyhedral fans with an explicit lineality space."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import fm
from .complex import FacePoset, SimplicialComplex
from .cone import Cone, relints_meet
from .linalg import IntVector, as_rational, dot, in_span, primitive, vector_rank

log = logging.getLogger(__name__)

COMBINATORIAL = "combinatorial"
GEOMETRIC = "geometric"


class Fan:
    """A fan in ``R^ambient_rank``.

    Every cone is ``cone(rays[i] for i in ray_set) + span(lineality)``.  The
    cone with the empty ray set is the lineality space itself; it is added if
    the caller leaves it out.  ``faces[i]`` holds every cone index that is a
    proper face of cone ``i`` (transitively closed).
    """

    def __init__(
        self,
        ambient_rank: int,
        rays: Sequence[Sequence[int]],
        cones: Sequence[Iterable[int]],
        lineality: Sequence[Sequence[int]] = (),
        face_pairs: Iterable[tuple[int, int]] | None = None,
    ):
        self.ambient_rank = int(ambient_rank)
        self.rays: tuple[IntVector, ...] = tuple(tuple(int(x) for x in r) for r in rays)
        self.lineality: tuple[IntVector, ...] = tuple(tuple(int(x) for x in v) for v in lineality)
        for v in self.rays + self.lineality:
            if len(v) != self.ambient_rank:
                raise ValueError(f"vector {v} does not have length {self.ambient_rank}")
        cone_sets = [frozenset(int(i) for i in c) for c in cones]
        for c in cone_sets:
            bad = [i for i in c if not 0 <= i < len(self.rays)]
            if bad:
                raise ValueError(f"cone refers to unknown ray indices {sorted(bad)}")
        if frozenset() not in cone_sets:
            cone_sets.append(frozenset())
        self.cones: tuple[frozenset[int], ...] = tuple(cone_sets)
        self.minimal = self.cones.index(frozenset())
        n = len(self.cones)
        direct: list[set[int]] = [set() for _ in range(n)]
        if face_pairs is None:
            for i, a in enumerate(self.cones):
                for j, b in enumerate(self.cones):
                    if a < b:
                        direct[j].add(i)
        else:
            for child, parent in face_pairs:
                if not (0 <= child < n and 0 <= parent < n):
                    raise ValueError(f"face pair ({child}, {parent}) out of range")
                direct[parent].add(child)
            for j in range(n):
                if j != self.minimal:
                    direct[j].add(self.minimal)
        closed = [set(s) for s in direct]
        changed = True
        while changed:
            changed = False
            for j in range(n):
                extra = set().union(*(closed[i] for i in closed[j])) - closed[j] if closed[j] else set()
                if extra:
                    closed[j] |= extra
                    changed = True
        self.faces: tuple[frozenset[int], ...] = tuple(frozenset(s - {j}) for j, s in enumerate(closed))
        self._face_pairs_given = face_pairs is not None

    def __repr__(self) -> str:
        return f"Fan(rank={self.ambient_rank}, rays={len(self.rays)}, cones={len(self.cones)}, lineality={len(self.lineality)})"

    def cone(self, i: int) -> Cone:
        return self._cones[i]

    @cached_property
    def _cones(self) -> tuple[Cone, ...]:
        return tuple(
            Cone(tuple(self.rays[k] for k in sorted(c)), self.lineality, self.ambient_rank) for c in self.cones
        )

    @cached_property
    def lineality_dim(self) -> int:
        return vector_rank(self.lineality)

    @cached_property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self._cones)

    @property
    def dimension(self) -> int:
        return max(self.dims)

    def maximal_cones(self) -> list[int]:
        parents: set[int] = set()
        for fs in self.faces:
            parents |= fs
        return [i for i in range(len(self.cones)) if i not in parents]

    def is_pure(self) -> bool:
        return len({self.dims[i] for i in self.maximal_cones()}) == 1

    def is_simplicial(self) -> bool:
        return all(len(c) == self.dims[i] - self.lineality_dim for i, c in enumerate(self.cones))

    def sorted_ray_lists(self) -> list[tuple[IntVector, ...]]:
        return [tuple(sorted(self.rays[k] for k in c)) for c in self.cones]

    def to_json(self) -> dict:
        cones = []
        for i, c in enumerate(self.cones):
            direct = [j for j in self.faces[i] if not any(j in self.faces[k] for k in self.faces[i])]
            cones.append({"rays": sorted(c), "faces": sorted(direct)})
        return {
            "ambient_rank": self.ambient_rank,
            "lineality": [list(v) for v in self.lineality],
            "rays": [list(r) for r in self.rays],
            "cones": cones,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Fan:
        try:
            rank = int(data["ambient_rank"])
            rays = data["rays"]
            cones_raw = data["cones"]
        except KeyError as exc:
            raise ValueError(f"fan JSON is missing the key {exc}") from None
        cones, pairs, any_faces = [], [], False
        for idx, c in enumerate(cones_raw):
            if isinstance(c, Mapping):
                cones.append(c["rays"])
                if "faces" in c:
                    any_faces = True
                    pairs += [(int(j), idx) for j in c["faces"]]
            else:
                cones.append(c)
        return cls(rank, rays, cones, data.get("lineality", []), pairs if any_faces else None)

    @classmethod
    def load(cls, path) -> Fan:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass
class ValidationReport:
    level: str
    violations: list[str] = field(default_factory=list)
    pure: bool = True
    maximal_dims: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_fan(f: Fan, level: str = COMBINATORIAL, require_pure: bool = False) -> ValidationReport:
    """Collect every violation of the fan axioms that the chosen level can see."""
    if level not in (COMBINATORIAL, GEOMETRIC):
        raise ValueError(f"unknown validation level {level!r}")
    rep = ValidationReport(level)
    bad = rep.violations

    lin_rank = vector_rank(f.lineality)
    if lin_rank != len(f.lineality):
        bad.append("lineality basis is linearly dependent")
    prim: list[IntVector | None] = []
    for i, r in enumerate(f.rays):
        if not any(r):
            bad.append(f"ray {i} is zero")
            prim.append(None)
            continue
        if gcd(*r) != 1:
            bad.append(f"ray {i} {list(r)} is not primitive")
        prim.append(primitive(r))
        if f.lineality and in_span(list(f.lineality), r):
            bad.append(f"ray {i} {list(r)} lies in the lineality span")
    for i, j in combinations(range(len(f.rays)), 2):
        if prim[i] is not None and prim[i] == prim[j]:
            bad.append(f"rays {i} and {j} are positively proportional (duplicate direction)")

    seen: dict[frozenset[int], int] = {}
    for i, c in enumerate(f.cones):
        if c in seen:
            bad.append(f"cones {seen[c]} and {i} have the same rays")
        seen.setdefault(c, i)

    dims = f.dims
    for j, fs in enumerate(f.faces):
        for i in fs:
            if not f.cones[i] <= f.cones[j]:
                bad.append(f"cone {i} is declared a face of cone {j} but its rays are not a subset")
            if dims[i] >= dims[j]:
                bad.append(f"dimension does not increase from face {i} to cone {j}")
        if j != f.minimal and f.minimal not in fs:
            bad.append(f"lineality cone is not a face of cone {j}")

    for j, c in enumerate(f.cones):
        if j == f.minimal:
            continue
        if len(c) == dims[j] - lin_rank:
            for sub in combinations(sorted(c), len(c) - 1):
                k = seen.get(frozenset(sub))
                if k is None:
                    bad.append(f"face {list(sub)} of simplicial cone {j} is missing")
                elif k not in f.faces[j]:
                    bad.append(f"cone {k} is a face of cone {j} but not declared as one")

    maxi = f.maximal_cones()
    rep.maximal_dims = sorted({dims[i] for i in maxi})
    rep.pure = len(rep.maximal_dims) <= 1
    if require_pure and not rep.pure:
        bad.append(f"fan is not pure: maximal cones have dimensions {rep.maximal_dims}")

    if level == GEOMETRIC and not bad:
        _validate_geometric(f, seen, bad)
    return rep


def _validate_geometric(f: Fan, index: Mapping[frozenset[int], int], bad: list[str]) -> None:
    for j, fs in enumerate(f.faces):
        parent = sorted(f.cones[j])
        cone = f.cone(j)
        for i in sorted(fs):
            local = [parent.index(k) for k in f.cones[i]]
            if not cone.is_face(local):
                bad.append(f"cone {i} is declared a face of cone {j} but is not a geometric face")
        for local_face in cone.face_ray_sets():
            glob = frozenset(parent[k] for k in local_face)
            if glob == f.cones[j]:
                continue
            k = index.get(glob)
            if k is None:
                bad.append(f"cone {j} has a face on rays {sorted(glob)} that is not in the fan")
            elif k not in fs:
                bad.append(f"cone {k} is a geometric face of cone {j} but not declared as one")
    n = len(f.cones)
    for i, j in combinations(range(n), 2):
        if i in f.faces[j] or j in f.faces[i]:
            continue
        if relints_meet(f.cone(i), f.cone(j)):
            bad.append(f"relative interiors of cones {i} and {j} intersect")


def skeleton(f: Fan, c: int) -> Fan:
    """Subfan of cones of codimension >= c relative to the top cone dimension."""
    top = f.dimension
    if c < 0 or c > top - f.lineality_dim:
        raise ValueError(f"codimension {c} out of range 0..{top - f.lineality_dim}")
    keep = [i for i in range(len(f.cones)) if f.dims[i] <= top - c]
    renum = {old: new for new, old in enumerate(keep)}
    pairs = [(renum[i], renum[j]) for j in keep for i in f.faces[j] if i in renum]
    return Fan(f.ambient_rank, f.rays, [f.cones[i] for i in keep], f.lineality, pairs)


def support_contains(f: Fan, w: Sequence) -> bool:
    w = [as_rational(x) for x in w]
    if len(w) != f.ambient_rank:
        raise ValueError(f"point has length {len(w)}, fan lives in rank {f.ambient_rank}")
    return any(f.cone(i).contains(w) for i in f.maximal_cones())


def _escapes(sigma: Cone, taus: Sequence[Cone]) -> bool:
    """Is there a point of ``sigma`` outside every cone in ``taus``?

    Points of sigma are parametrised as ``sum la_i r_i + sum nu_j l_j`` with
    ``la >= 0``.  Leaving a cone tau means violating one of its facet
    inequalities or one of its defining equations; we search over one choice
    per tau, pruning with Fourier-Motzkin feasibility.
    """
    gens = list(sigma.rays) + list(sigma.lineality)
    nv = len(gens)
    base = []
    for i in range(len(sigma.rays)):
        row = [0] * nv
        row[i] = 1
        base.append(fm.Constraint.ge(row, 0))

    def pulled(u: Sequence[int]) -> list:
        return [dot(u, g) for g in gens]

    options: list[list[fm.Constraint]] = []
    for tau in taus:
        opts = [fm.Constraint.gt([-x for x in pulled(u)], 0) for u in tau.facet_normals]
        for e in tau.equations:
            p = pulled(e)
            opts += [fm.Constraint.gt(p, 0), fm.Constraint.gt([-x for x in p], 0)]
        opts = [o for o in opts if any(o.coeffs)]
        if not opts:
            return False
        options.append(opts)

    def search(k: int, cons: list) -> bool:
        if k == len(options):
            return True
        for opt in options[k]:
            trial = cons + [opt]
            if fm.feasible(nv, trial):
                if search(k + 1, trial):
                    return True
        return False

    return search(0, base)


def support_contained_in(f: Fan, g: Fan) -> bool:
    """Exact test of ``|f| subset |g|``."""
    if f.ambient_rank != g.ambient_rank:
        raise ValueError("fans live in different ambient ranks")
    for i in range(len(f.cones)):
        if not support_contains(g, f.cone(i).relint_point()):
            return False
    taus = [g.cone(i) for i in g.maximal_cones()]
    return not any(_escapes(f.cone(i), taus) for i in f.maximal_cones())


def whole_space(rank: int) -> Fan:
    basis = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    return Fan(rank, [], [[]], basis)


def is_complete(f: Fan) -> bool:
    return support_contained_in(whole_space(f.ambient_rank), f)


def link_poset(f: Fan) -> FacePoset:
    """Cones above the lineality cone, graded by their cell dimension in the link.

    Elements are the fan's cone indices.
    """
    lin = f.lineality_dim
    elems = [(i, f.dims[i] - lin - 1) for i in range(len(f.cones)) if i != f.minimal]
    rels = [(i, j) for j in range(len(f.cones)) if j != f.minimal for i in f.faces[j] if i != f.minimal]
    return FacePoset(elems, rels)


def crosscut_complex(f: Fan) -> SimplicialComplex:
    """For a simplicial fan: vertices are rays, simplices are ray sets of cones."""
    if not f.is_simplicial():
        raise ValueError("crosscut complex needs a simplicial fan")
    facets = [sorted(f.cones[i]) for i in f.maximal_cones() if f.cones[i]]
    return SimplicialComplex(facets, vertices=sorted({k for c in f.cones for k in c}))
