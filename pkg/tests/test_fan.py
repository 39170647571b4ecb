import random
from fractions import Fraction

import pytest

from troplink.complex import order_complex, reduced_betti
from troplink.fan import (
    COMBINATORIAL,
    GEOMETRIC,
    Fan,
    crosscut_complex,
    is_complete,
    link_poset,
    skeleton,
    support_contained_in,
    support_contains,
    validate_fan,
)
from troplink.fixtures import complete_fans, matroids
from troplink.generators import product_fan, projective_space_fan
from troplink.matroid import bergman_fan, uniform_matroid


def test_duplicate_ray_direction_is_reported():
    f = Fan(2, [(1, 0), (2, 0)], [[0], [1]])
    rep = validate_fan(f)
    assert not rep.ok
    text = " ".join(rep.violations)
    assert "not primitive" in text and "duplicate direction" in text


def test_overlapping_cones_fail_geometric_check_only():
    rays = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]
    # two 2-cones both containing the ray (1,1) in their interiors
    f = Fan(2, rays, [[0], [1], [3], [4], [0, 4], [3, 1]])
    assert validate_fan(f, COMBINATORIAL).ok
    rep = validate_fan(f, GEOMETRIC)
    assert not rep.ok
    assert any("relative interiors" in v for v in rep.violations)
    # the common point lies in both interiors
    assert f.cone(4).contains((1, 1)) and f.cone(5).contains((1, 1))


def test_missing_geometric_face():
    f = Fan(2, [(1, 0), (0, 1)], [[0, 1]], face_pairs=[])
    assert not validate_fan(f).ok


def test_skeleton_examples():
    p2 = projective_space_fan(2)
    s = skeleton(p2, 1)
    assert sorted(len(c) for c in s.cones) == [0, 1, 1, 1]
    assert sorted(skeleton(p2, 0).cones, key=sorted) == sorted(p2.cones, key=sorted)
    assert skeleton(projective_space_fan(3), 3).cones == (frozenset(),)
    with pytest.raises(ValueError):
        skeleton(p2, 3)


def test_skeleton_composition():
    # codimension is measured from the fan's own top dimension, so codimensions add
    for f in complete_fans().values():
        top = f.dimension - f.lineality_dim
        for c in range(top + 1):
            for c2 in range(top - c + 1):
                twice = skeleton(skeleton(f, c), c2)
                assert set(twice.cones) == set(skeleton(f, c + c2).cones)


def test_skeleton_link_is_subposet():
    f = projective_space_fan(3)
    full = link_poset(f)
    for c in range(1, 4):
        sub = link_poset(skeleton(f, c))
        cutoff = f.dimension - f.lineality_dim - c - 1
        expected = {f.cones[e] for e in full.elements if full.dims[e] <= cutoff}
        s = skeleton(f, c)
        assert {s.cones[e] for e in sub.elements} == expected


def test_support_contains_examples():
    assert all(support_contains(projective_space_fan(2), w) for w in [(0, 0), (5, -3), (-1, -7)])
    ray = Fan(2, [(1, 0)], [[0]])
    assert support_contains(ray, (2, 0))
    assert not support_contains(ray, (1, 1))
    u23 = bergman_fan(uniform_matroid(2, 3))
    assert support_contains(u23, (1, 0, 0))
    assert support_contains(u23, (Fraction(5, 2), 1, 1))
    assert not support_contains(u23, (1, 2, 0))


def test_support_containment_examples():
    g = projective_space_fan(2)
    assert support_contained_in(skeleton(g, 1), g)
    p1 = projective_space_fan(1)
    assert support_contained_in(g, product_fan(p1, p1))
    assert support_contained_in(product_fan(p1, p1), g)
    assert not support_contained_in(Fan(2, [(1, 1)], [[0]]), Fan(2, [(1, 0), (0, 1)], [[0], [1]]))
    assert not support_contained_in(g, skeleton(g, 1))


def test_completeness():
    for f in complete_fans().values():
        assert is_complete(f)
    assert not is_complete(skeleton(projective_space_fan(2), 1))


def test_link_poset_examples():
    hexagon = order_complex(link_poset(projective_space_fan(2)))
    assert hexagon.f_vector() == (6, 6)
    assert reduced_betti(hexagon) == [0, 1]
    three = Fan(2, [(1, 0), (0, 1), (-1, -1)], [[0], [1], [2]])
    p = link_poset(three)
    assert len(p) == 3 and not p.covers
    torus = Fan(2, [], [[]], [(1, 0), (0, 1)])
    assert len(link_poset(torus)) == 0


def test_crosscut_matches_order_complex():
    fans = list(complete_fans().values()) + [bergman_fan(m) for m in matroids().values()]
    for f in fans:
        if f.is_simplicial():
            assert reduced_betti(crosscut_complex(f)) == reduced_betti(order_complex(link_poset(f)))


def test_monte_carlo_support_membership():
    rng = random.Random(3)
    fans = list(complete_fans().values()) + [bergman_fan(m) for m in matroids().values()]
    for f in fans:
        for i in rng.sample(range(len(f.cones)), min(6, len(f.cones))):
            cone = f.cone(i)
            w = [Fraction(0)] * f.ambient_rank
            for r in cone.rays:
                lam = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                w = [a + lam * b for a, b in zip(w, r)]
            for v in cone.lineality:
                lam = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                w = [a + lam * b for a, b in zip(w, v)]
            assert support_contains(f, w)


def test_json_round_trip():
    for f in complete_fans().values():
        g = Fan.from_json(f.to_json())
        assert g.cones == f.cones and g.faces == f.faces and g.rays == f.rays


def test_bergman_fans_are_geometric_fans():
    for name in ("u22", "u23", "u24", "u35", "k4", "nonuniform"):
        assert validate_fan(bergman_fan(matroids()[name]), GEOMETRIC).ok, name
