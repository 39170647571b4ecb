"""Build the fan of the tropical Grassmannian G(3,6) as troplink fan JSON.

Coordinates are indexed by the 20 triples of {1..6} in lexicographic order,
with min convention.  The fan structure is the one cut out by the 3-term
Pluecker relations: two weights share a cone exactly when every relation is
minimised by the same set of terms.  Cones are found as closures of ray sets
under that rule; the candidate rays are checked, not trusted.

    python3 scripts/build_gr36.py tests/data/gr36_fan.json
"""

from __future__ import annotations

import json
import sys
from itertools import combinations

from troplink.linalg import vector_rank

N = 6
TRIPLES = list(combinations(range(1, N + 1), 3))
POS = {t: i for i, t in enumerate(TRIPLES)}


def coord(*labels) -> int:
    return POS[tuple(sorted(labels))]


def relations():
    out = []
    for s in range(1, N + 1):
        rest = [x for x in range(1, N + 1) if x != s]
        for i, j, k, l in combinations(rest, 4):
            out.append(
                (
                    (coord(s, i, j), coord(s, k, l)),
                    (coord(s, i, k), coord(s, j, l)),
                    (coord(s, i, l), coord(s, j, k)),
                )
            )
    return out


RELATIONS = relations()


def signature(w):
    sig = []
    for terms in RELATIONS:
        vals = [w[a] + w[b] for a, b in terms]
        low = min(vals)
        sig.append(frozenset(t for t, v in enumerate(vals) if v == low))
    return tuple(sig)


def in_dressian(sig) -> bool:
    return all(len(s) >= 2 for s in sig)


def e(*triples):
    v = [0] * len(TRIPLES)
    for t in triples:
        v[coord(*t)] += 1
    return v


def candidate_rays():
    """E, F and G type vectors; the G family is a superset, filtered by :func:`cone_dim`."""
    rays = [e(t) for t in TRIPLES]
    for quad in combinations(range(1, N + 1), 4):
        rays.append(e(*combinations(quad, 3)))
    for quad in combinations(range(1, N + 1), 4):
        m, n = (x for x in range(1, N + 1) if x not in quad)
        for i, j in combinations(quad, 2):
            rays.append(e(*combinations(quad, 3), (i, j, m), (i, j, n)))
    return rays


def cone_dim(sig) -> int:
    """Dimension of the closed cone of weights minimised at least on ``sig``."""
    eqs = []
    for terms, s in zip(RELATIONS, sig):
        first, *others = sorted(s)
        for t in others:
            v = [0] * len(TRIPLES)
            for c in terms[first]:
                v[c] += 1
            for c in terms[t]:
                v[c] -= 1
            eqs.append(v)
    return len(TRIPLES) - vector_rank(eqs)


def main(out_path: str) -> None:
    lineality = [[int(a in t) for t in TRIPLES] for a in range(1, N + 1)]
    lin_rank = vector_rank(lineality)
    rays, sigs = [], []
    for r in candidate_rays():
        sig = signature(r)
        if not in_dressian(sig):
            raise SystemExit(f"candidate {r} is not in the tropical Grassmannian")
        if sig not in sigs and cone_dim(sig) == lin_rank + 1:
            rays.append(r)
            sigs.append(sig)
    if sorted(sum(r) for r in rays) != [1] * 20 + [4] * 15 + [6] * 30:
        raise SystemExit(f"expected 20 + 15 + 30 rays, found {len(rays)}")

    def closure(ray_set):
        w = [sum(rays[i][c] for i in ray_set) for c in range(len(TRIPLES))]
        sig = signature(w)
        if not in_dressian(sig):
            return None
        return frozenset(i for i, s in enumerate(sigs) if all(a >= b for a, b in zip(s, sig)))

    for i in range(len(rays)):
        if closure({i}) != {i} or vector_rank(lineality + [rays[i]]) != lin_rank + 1:
            raise SystemExit(f"candidate {rays[i]} is not a ray")
    cones = {frozenset({i}) for i in range(len(rays))}
    frontier = list(cones)
    while frontier:
        nxt = []
        for c in frontier:
            for r in range(len(rays)):
                if r in c:
                    continue
                t = closure(c | {r})
                if t is not None and t not in cones:
                    cones.add(t)
                    nxt.append(t)
        frontier = nxt
    dims = {c: vector_rank(lineality + [rays[i] for i in c]) - lin_rank for c in cones}
    f = [sum(1 for d in dims.values() if d == k) for k in range(1, 5)]
    print(f"rays {len(rays)}, cones by dimension mod lineality {f}", file=sys.stderr)
    ordered = sorted(cones, key=lambda c: (dims[c], sorted(c)))
    data = {
        "ambient_rank": len(TRIPLES),
        "lineality": lineality,
        "rays": rays,
        "cones": [sorted(c) for c in ordered],
    }
    with open(out_path, "w") as fh:
        json.dump(data, fh, separators=(",", ":"))
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "gr36_fan.json")
