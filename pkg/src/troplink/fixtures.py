"""Built-in example inputs, shared by the CLI ``fixtures`` command and the tests."""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

from .fan import Fan
from .generators import Split, product_fan, splits_to_json, projective_space_fan, tropical_hypersurface_fan
from .matroid import Matroid, bergman_fan, matroid_from_graph, matroid_from_matrix, uniform_matroid
from .polyparse import parse_polynomial
from .polytope import LatticePolytope, normal_fan
from .strata import StratificationIncidence

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
C5_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
# columns 1,2,4 are dependent; otherwise generic
NONUNIFORM_MATRIX = [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 0, 3]]

HYPERSURFACE_POLYNOMIALS = [
    "x1 + x2 + 1",
    "x1*x2 + x1 + x2 + 1",
    "x1^2 + x1*x2 + x2^2 + x1 + x2 + 1",
    "x1^2*x2^-1 - 3*x2 + 1/2",
    "x1 + x2 + x3 + 1",
    "x1*x2*x3 + x1 + x2^2 + x3 - 1",
    "x1^-1 + x2^-1 + x3^-1 + x1*x2*x3",
]


def octahedron_normal_fan() -> Fan:
    """A complete fan with non-simplicial (four-ray) maximal cones."""
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    return normal_fan(LatticePolytope(tuple(pts)))


def complete_fans() -> dict[str, Fan]:
    p1 = projective_space_fan(1)
    return {
        "p2": projective_space_fan(2),
        "p3": projective_space_fan(3),
        "p4": projective_space_fan(4),
        "p1xp1": product_fan(p1, p1),
        "p1xp2": product_fan(p1, projective_space_fan(2)),
        "octahedron_normal": octahedron_normal_fan(),
    }


def matroids() -> dict[str, Matroid]:
    return {
        "u22": uniform_matroid(2, 2),
        "u23": uniform_matroid(2, 3),
        "u24": uniform_matroid(2, 4),
        "u25": uniform_matroid(2, 5),
        "u26": uniform_matroid(2, 6),
        "u35": uniform_matroid(3, 5),
        "u36": uniform_matroid(3, 6),
        "k4": matroid_from_graph(K4_EDGES),
        "c5": matroid_from_graph(C5_EDGES),
        "nonuniform": matroid_from_matrix(NONUNIFORM_MATRIX),
    }


def matroid_sources() -> dict[str, dict]:
    out = {name: m.to_json() for name, m in matroids().items()}
    out["k4"] = {"graph": [list(e) for e in K4_EDGES]}
    out["c5"] = {"graph": [list(e) for e in C5_EDGES]}
    out["nonuniform"] = {"matrix": NONUNIFORM_MATRIX}
    return out


def _general_position(m: int, depth: int) -> StratificationIncidence:
    """m components, every intersection of at most ``depth`` of them connected and nonempty."""
    pieces = {idx: 1 for k in range(2, depth + 1) for idx in combinations(range(1, m + 1), k)}
    cont = {(idx, 0, i): 0 for idx in pieces for i in idx}
    return StratificationIncidence(m, pieces, cont)


def stratifications() -> dict[str, StratificationIncidence]:
    return {
        "three_lines": _general_position(3, 2),
        "four_lines": _general_position(4, 2),
        "p3_toric_boundary": _general_position(4, 3),
        "conic_and_line": StratificationIncidence(2, {(1, 2): 2}, {((1, 2), z, i): 0 for z in (0, 1) for i in (1, 2)}),
        "single_component": StratificationIncidence(1, {}, {}),
        "two_disjoint": StratificationIncidence(2, {}, {}),
    }


def write_fixtures(outdir) -> list[Path]:
    """Write every built-in input under ``outdir``; returns the written paths."""
    root = Path(outdir)
    written = []

    def dump(rel: str, data) -> None:
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
        written.append(path)

    for name, fan in complete_fans().items():
        dump(f"fans/{name}.json", fan.to_json())
    for name in ("u22", "u23", "k4"):
        dump(f"fans/bergman_{name}.json", bergman_fan(matroids()[name]).to_json())
    dump("fans/tropical_line.json", tropical_hypersurface_fan(parse_polynomial("x1 + x2 + 1")).to_json())
    for name, data in matroid_sources().items():
        dump(f"matroids/{name}.json", data)
    for name, s in stratifications().items():
        dump(f"strata/{name}.json", s.to_json())
    for n in (4, 5, 6):
        caterpillar = [Split(n, frozenset(range(1, k + 1))) for k in range(2, n - 1)]
        dump(f"trees/caterpillar_{n}.json", splits_to_json(caterpillar))
    path = root / "polynomials.txt"
    path.write_text("\n".join(HYPERSURFACE_POLYNOMIALS) + "\n")
    written.append(path)
    return written
