import random

import pytest
from hypothesis import given

from troplink.complex import (
    FacePoset,
    SimplicialComplex,
    homology_of_chain_complex,
    order_complex,
    reduced_betti,
    reduced_betti_minus_one,
)
from troplink.fixtures import stratifications
from troplink.strata import (
    IncidenceError,
    MultiplicityError,
    StratificationIncidence,
    dual_complex,
    hat_link,
    random_incidence,
    weight_row_complex,
)

from strategies import face_posets_with_multiplicities

FIX = stratifications()


def test_dual_complex_examples():
    assert reduced_betti(dual_complex(FIX["three_lines"])) == [0, 1]
    k = dual_complex(FIX["conic_and_line"])
    assert k.f_vector() == (2, 2) and reduced_betti(k) == [0, 1]
    assert reduced_betti(dual_complex(FIX["single_component"])) == [0]


def test_weight_row_examples():
    row = weight_row_complex(FIX["three_lines"])
    assert row.ranks == (1, 3, 3)
    assert homology_of_chain_complex(row) == [0, 0, 1]
    row = weight_row_complex(FIX["single_component"])
    assert row.ranks == (1, 1) and homology_of_chain_complex(row) == [0, 0]
    row = weight_row_complex(FIX["two_disjoint"])
    assert row.ranks == (1, 2) and homology_of_chain_complex(row) == [0, 1]


def _identity_holds(s):
    h = homology_of_chain_complex(weight_row_complex(s))
    k = dual_complex(s)
    return h == [reduced_betti_minus_one(k)] + reduced_betti(k)


def test_weight_row_matches_dual_complex():
    for s in FIX.values():
        assert _identity_holds(s)
    rng = random.Random(5)
    for _ in range(40):
        assert _identity_holds(random_incidence(rng, rng.randint(1, 4)))


def test_non_commuting_square_is_named():
    # B_1 has two pieces; B_12 lies on piece 0 and B_13 on piece 1, yet B_123 lies in both
    pieces = {(1,): 2, (1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 2, 3): 1}
    cont = {((1,), 1, 1): 0}
    for idx in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]:
        for i in idx:
            cont[(idx, 0, i)] = 0
    cont[((1, 3), 0, 3)] = 1
    with pytest.raises(IncidenceError, match=r"does not commute at piece 0 of B_\[1, 2, 3\]"):
        StratificationIncidence(3, pieces, cont)


def test_forced_containments_are_filled():
    s = StratificationIncidence.from_json({"m": 3, "pieces": {"1,2": 1, "1,3": 1, "2,3": 1}})
    assert s.containment == FIX["three_lines"].containment


def test_ambiguous_containment_must_be_given():
    with pytest.raises(IncidenceError, match="missing containment"):
        StratificationIncidence(2, {(1,): 2, (1, 2): 1}, {((1,), 1, 1): 0})


def test_disconnected_ambient_rejected():
    with pytest.raises(IncidenceError):
        StratificationIncidence(1, {(): 2}, {})


def test_json_round_trip():
    for s in FIX.values():
        t = StratificationIncidence.from_json(s.to_json())
        assert t.pieces == s.pieces and t.containment == s.containment


def test_hat_link_examples():
    edge = FacePoset([("a", 0), ("b", 0), ("e", 1)], [("a", "e"), ("b", "e")])
    theta = hat_link(edge, {"e": 3})
    assert reduced_betti(order_complex(theta)) == [0, 2]
    same = hat_link(edge, {"e": 1})
    assert same.elements == edge.elements and same.covers == edge.covers
    points = FacePoset([(1, 0), (2, 0), (3, 0)])
    assert reduced_betti(order_complex(hat_link(points, {1: 2, 2: 1, 3: 1}))) == [3]
    with pytest.raises(MultiplicityError):
        hat_link(edge, {"a": 2})


@given(face_posets_with_multiplicities())
def test_hat_link_law(data):
    p, mult = data
    before = reduced_betti(order_complex(p))
    after = reduced_betti(order_complex(hat_link(p, mult)))
    assert after[:-1] == before[:-1]
    assert after[-1] == before[-1] + sum(k - 1 for k in mult.values())


@given(face_posets_with_multiplicities())
def test_hat_link_commutes_with_subdivision(data):
    p, mult = data
    # duplicate every chain ending at a multiplied cell, which is the subdivided copy of that cell
    chains = []
    for chain in p.maximal_chains():
        top = chain[-1]
        chains.append(chain)
        chains += [chain[:-1] + ((top, a),) for a in range(2, mult.get(top, 1) + 1)]
    manual = SimplicialComplex(chains)
    assert reduced_betti(manual) == reduced_betti(order_complex(hat_link(p, mult)))
