import random
from itertools import combinations, product

import pytest

from troplink.complex import order_complex, reduced_betti, reduced_betti_minus_one
from troplink.fan import crosscut_complex, link_poset, support_contains, validate_fan
from troplink.fixtures import HYPERSURFACE_POLYNOMIALS, complete_fans
from troplink.generators import (
    Split,
    all_splits,
    ci_skeleton_link,
    in_tropical_hypersurface,
    initial_form,
    projective_space_fan,
    split_metric,
    splits_compatible,
    splits_from_json,
    splits_to_json,
    tree_space_link,
    tropical_hypersurface_fan,
)
from troplink.polyparse import parse_polynomial

LINE = parse_polynomial("x1 + x2 + 1")


def S(n, *side):
    return Split(n, frozenset(side))


def test_split_compatibility_examples():
    assert splits_compatible(S(4, 1, 2), S(4, 1, 2))
    assert not splits_compatible(S(4, 1, 2), S(4, 1, 3))
    assert splits_compatible(S(5, 1, 2), S(5, 1, 2, 3))
    with pytest.raises(ValueError):
        splits_compatible(S(4, 1, 2), S(5, 1, 2))


def test_split_canonical_side():
    assert S(5, 3, 4, 5) == S(5, 1, 2)
    assert str(S(5, 1, 2)) == "12|345"
    with pytest.raises(ValueError):
        S(4, 1)


def test_split_metric_separates():
    assert split_metric(S(4, 1, 2)) == (0, 1, 1, 1, 1, 0)


def test_tree_space_examples():
    t4 = tree_space_link(4)
    assert t4.f_vector() == (3,) and reduced_betti(t4) == [2]
    t5 = tree_space_link(5)
    assert t5.f_vector() == (10, 15) and reduced_betti(t5) == [0, 6]
    t6 = tree_space_link(6)
    assert t6.f_vector()[0] == 25 and len(t6.facets) == 105
    b = reduced_betti(t6)
    assert b[:2] == [0, 0]
    with pytest.raises(ValueError):
        tree_space_link(3)


def test_tree_space_is_flag():
    rng = random.Random(11)
    cx = tree_space_link(6)
    faces = {frozenset(cx.vertices[i] for i in f) for f in cx.faces()}
    splits = all_splits(6)
    for _ in range(400):
        trio = rng.sample(splits, 3)
        pairwise = all(splits_compatible(a, b) for a, b in combinations(trio, 2))
        assert (frozenset(trio) in faces) == pairwise


def test_splits_json_round_trip():
    trees = [S(6, 1, 2), S(6, 1, 2, 3)]
    assert splits_from_json(splits_to_json(trees)) == trees


def test_ci_skeleton_examples():
    assert reduced_betti(order_complex(ci_skeleton_link(projective_space_fan(2), 1))) == [2]
    p3 = projective_space_fan(3)
    k4 = order_complex(ci_skeleton_link(p3, 1))
    assert reduced_betti(k4) == [0, 3]
    assert reduced_betti(order_complex(ci_skeleton_link(p3, 2))) == [3]
    with pytest.raises(ValueError, match="not complete"):
        from troplink.fan import skeleton

        ci_skeleton_link(skeleton(projective_space_fan(2), 1), 1)


def test_ci_skeletons_vanish_below_top():
    for name, f in complete_fans().items():
        r = f.ambient_rank - f.lineality_dim
        for c in range(1, r):
            b = reduced_betti(order_complex(ci_skeleton_link(f, c)))
            assert b[: r - c - 1] == [0] * (r - c - 1), (name, c)


def test_tropical_line_min_convention():
    f = tropical_hypersurface_fan(LINE)
    assert sorted(f.rays) == [(-1, -1), (0, 1), (1, 0)]
    assert reduced_betti(crosscut_complex(f)) == [2]


def test_point_hypersurface_has_empty_link():
    f = tropical_hypersurface_fan(parse_polynomial("x1 + 1"))
    cx = order_complex(link_poset(f))
    assert reduced_betti(cx) == [] and reduced_betti_minus_one(cx) == 1


def test_square_hypersurface():
    f = tropical_hypersurface_fan(parse_polynomial("x1*x2 + x1 + x2 + 1"))
    assert len(f.rays) == 4
    assert reduced_betti(crosscut_complex(f)) == [3]


def test_monomial_rejected():
    with pytest.raises(ValueError, match="tropical hypersurface of a monomial is empty"):
        tropical_hypersurface_fan(parse_polynomial("3*x1^2"))


def test_initial_form_examples():
    assert initial_form(LINE, (0, 0)) == LINE
    assert str(initial_form(LINE, (1, 1))) == "1"
    assert str(initial_form(LINE, (-1, -1))) == "x1 + x2"
    assert in_tropical_hypersurface(LINE, (-1, -1))
    assert not in_tropical_hypersurface(LINE, (1, 1))
    assert in_tropical_hypersurface(LINE, (0, 0))


def test_membership_routes_agree():
    for text in HYPERSURFACE_POLYNOMIALS:
        f = parse_polynomial(text)
        fan = tropical_hypersurface_fan(f)
        assert validate_fan(fan).ok
        k = 3 if f.nvars == 2 else 2
        for w in product(range(-k, k + 1), repeat=f.nvars):
            assert in_tropical_hypersurface(f, w) == support_contains(fan, w), (text, w)
