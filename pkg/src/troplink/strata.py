"""Boundary stratification data, dual complexes, the top weight row, hat-links.

Components of the boundary are labelled 1..m.  A *piece* is a connected
component of some intersection ``B_I``; pieces over ``I`` are numbered
0..count-1.  The ambient variety is the single piece over the empty set.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Hashable, Mapping

from .complex import ChainComplex, DeltaComplex, FacePoset

Index = tuple[int, ...]  # sorted component labels


class IncidenceError(ValueError):
    pass


@dataclass(frozen=True)
class StratificationIncidence:
    m: int
    pieces: Mapping[Index, int]
    containment: Mapping[tuple[Index, int, int], int]

    def __post_init__(self):
        pieces = {tuple(sorted(k)): int(v) for k, v in self.pieces.items() if int(v) > 0}
        pieces[()] = pieces.get((), 1)
        if pieces[()] != 1:
            raise IncidenceError("the ambient variety must be connected (one piece over the empty set)")
        for i in range(1, self.m + 1):
            pieces.setdefault((i,), 1)
        for idx in pieces:
            if any(not 1 <= i <= self.m for i in idx) or len(set(idx)) != len(idx):
                raise IncidenceError(f"index set {list(idx)} is not a subset of 1..{self.m}")
        cont = {(tuple(sorted(k[0])), int(k[1]), int(k[2])): int(v) for k, v in self.containment.items()}
        # a containment into a stratum with a single piece is forced
        for idx, count in pieces.items():
            for i in idx:
                if pieces.get(tuple(k for k in idx if k != i)) == 1:
                    for z in range(count):
                        cont.setdefault((idx, z, i), 0)
        object.__setattr__(self, "pieces", dict(sorted(pieces.items(), key=lambda kv: (len(kv[0]), kv[0]))))
        object.__setattr__(self, "containment", cont)
        self._check()

    def _check(self) -> None:
        for idx, count in self.pieces.items():
            for z in range(count):
                for i in idx:
                    key = (idx, z, i)
                    if key not in self.containment:
                        raise IncidenceError(f"missing containment for piece {z} of B_{list(idx)} dropping {i}")
                    sub = tuple(k for k in idx if k != i)
                    target = self.containment[key]
                    if not 0 <= target < self.pieces.get(sub, 0):
                        raise IncidenceError(
                            f"piece {z} of B_{list(idx)} dropping {i} maps to piece {target} of B_{list(sub)}, which does not exist"
                        )
                for i, j in combinations(idx, 2):
                    a = self.up(self.up((idx, z), i), j)
                    b = self.up(self.up((idx, z), j), i)
                    if a != b:
                        raise IncidenceError(
                            f"containment square does not commute at piece {z} of B_{list(idx)} for components {i}, {j}: "
                            f"dropping {i} then {j} gives {a[1]}, dropping {j} then {i} gives {b[1]}"
                        )
        extra = [k for k in self.containment if k[0] not in self.pieces or k[2] not in k[0]]
        if extra:
            raise IncidenceError(f"containment entries for nonexistent pieces: {extra[:3]}")

    def up(self, piece: tuple[Index, int], i: int) -> tuple[Index, int]:
        idx, z = piece
        return tuple(k for k in idx if k != i), self.containment[(idx, z, i)]

    def level(self, s: int) -> list[tuple[Index, int]]:
        return [(idx, z) for idx, c in self.pieces.items() if len(idx) == s for z in range(c)]

    @property
    def depth(self) -> int:
        return max(len(idx) for idx in self.pieces)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "pieces": {",".join(map(str, idx)): c for idx, c in self.pieces.items() if idx},
            "containment": {
                f"{','.join(map(str, idx))}|{z}|{i}": t for (idx, z, i), t in self.containment.items() if len(idx) > 1
            },
        }

    @classmethod
    def from_json(cls, data: Mapping) -> StratificationIncidence:
        def parse_index(text: str) -> Index:
            text = text.strip().strip("[]").strip()
            return tuple(sorted(int(x) for x in text.split(",") if x.strip())) if text else ()

        pieces = {parse_index(k): int(v) for k, v in data.get("pieces", {}).items()}
        cont = {}
        for key, v in data.get("containment", {}).items():
            try:
                idx, z, i = key.split("|")
                cont[(parse_index(idx), int(z), int(i))] = int(v)
            except ValueError:
                raise IncidenceError(f'containment key {key!r} is not of the form "I|piece|i"') from None
        return cls(int(data["m"]), pieces, cont)

    @classmethod
    def load(cls, path) -> StratificationIncidence:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _cell_id(piece: tuple[Index, int]) -> str:
    idx, z = piece
    return f"{','.join(map(str, idx))}#{z}"


def dual_complex(s: StratificationIncidence) -> DeltaComplex:
    """One (|I|-1)-cell per piece over I; facets via containment, signs alternating."""
    cells = [[_cell_id(p) for p in s.level(k)] for k in range(1, s.depth + 1)]
    boundary = {}
    for k in range(2, s.depth + 1):
        for piece in s.level(k):
            idx = piece[0]
            boundary[_cell_id(piece)] = [(_cell_id(s.up(piece, i)), (-1) ** t) for t, i in enumerate(idx)]
    return DeltaComplex(cells, boundary)


def weight_row_complex(s: StratificationIncidence) -> ChainComplex:
    """Chain complex on pieces by level with Gysin signs (-1)^(s+t)."""
    levels = [s.level(k) for k in range(s.depth + 1)]
    pos = [{p: i for i, p in enumerate(layer)} for layer in levels]
    diffs = {}
    for deg in range(1, len(levels)):
        rows: list[dict[int, int]] = [{} for _ in levels[deg - 1]]
        for j, piece in enumerate(levels[deg]):
            for t, i in enumerate(piece[0], start=1):
                rows[pos[deg - 1][s.up(piece, i)]][j] = (-1) ** (deg + t)
        diffs[deg] = tuple(rows)
    cc = ChainComplex(tuple(len(layer) for layer in levels), diffs, offset=0)
    try:
        cc.check_d_squared()
    except ValueError as exc:
        raise IncidenceError(f"weight row is not a complex: {exc}") from exc
    return cc


def random_incidence(rng: random.Random, m: int, max_pieces: int = 2) -> StratificationIncidence:
    """Random valid incidence data: containments are drawn among commuting choices."""
    pieces: dict[Index, int] = {(): 1}
    cont: dict[tuple[Index, int, int], int] = {}
    for i in range(1, m + 1):
        pieces[(i,)] = 1
        cont[((i,), 0, i)] = 0
    for k in range(2, m + 1):
        for idx in combinations(range(1, m + 1), k):
            subs = [tuple(x for x in idx if x != i) for i in idx]
            if any(pieces.get(sub, 0) == 0 for sub in subs):
                continue
            want = rng.randint(0, max_pieces)
            made = 0
            for _ in range(want):
                choices = []
                for combo in product(*(range(pieces[sub]) for sub in subs)):
                    ok = True
                    for (a, i), (b, j) in combinations(list(zip(range(k), idx)), 2):
                        # dropping i then j must equal dropping j then i
                        ta = cont[(subs[a], combo[a], j)]
                        tb = cont[(subs[b], combo[b], i)]
                        if ta != tb:
                            ok = False
                            break
                    if ok:
                        choices.append(combo)
                if not choices:
                    break
                combo = rng.choice(choices)
                for t, i in enumerate(idx):
                    cont[(idx, made, i)] = combo[t]
                made += 1
            if made:
                pieces[idx] = made
    return StratificationIncidence(m, pieces, cont)


class MultiplicityError(ValueError):
    pass


def hat_link(p: FacePoset, mult: Mapping[Hashable, int]) -> FacePoset:
    """Replace each maximal cell x of multiplicity k by k copies glued along the boundary.

    Copy 1 keeps the id ``x``; the others get ids ``(x, 2) .. (x, k)``.
    """
    maximal = set(p.maximal_elements())
    for x, k in mult.items():
        if x not in p.dims:
            raise MultiplicityError(f"multiplicity given for unknown cell {x!r}")
        if x not in maximal:
            raise MultiplicityError(f"multiplicity given for non-maximal cell {x!r}")
        if int(k) < 1:
            raise MultiplicityError(f"multiplicity of {x!r} must be >= 1, got {k}")
    elems = [(e, p.dims[e]) for e in p.elements]
    rels = list(p.covers)
    for x in p.elements:
        for a in range(2, int(mult.get(x, 1)) + 1):
            copy = (x, a)
            if copy in p.dims:
                raise MultiplicityError(f"id {copy!r} already used")
            elems.append((copy, p.dims[x]))
            rels += [(lo, copy) for lo in p.below[x]]
    return FacePoset(elems, rels)
