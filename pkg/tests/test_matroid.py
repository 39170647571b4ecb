import pytest

from troplink.complex import SimplicialComplex, order_complex, reduced_betti
from troplink.fan import crosscut_complex, link_poset
from troplink.fixtures import K4_EDGES, matroids
from troplink.matroid import (
    MatroidError,
    bergman_fan,
    flats_lattice,
    matroid_from_bases,
    matroid_from_graph,
    matroid_from_json,
    matroid_from_matrix,
    mobius_top,
    uniform_matroid,
)


def test_constructions_agree():
    u23 = uniform_matroid(2, 3)
    assert matroid_from_matrix([[1, 0, 1], [0, 1, 1]]).bases == u23.bases
    assert matroid_from_graph([(1, 2), (2, 3), (1, 3)]).bases == u23.bases
    assert matroid_from_bases(2, [[1, 2]]).bases == uniform_matroid(2, 2).bases


def test_exchange_axiom_violation_is_named():
    with pytest.raises(MatroidError, match=r"\{1, 2\}|\[1, 2\]"):
        matroid_from_bases(4, [[1, 2], [3, 4]])


def test_flats():
    lat = flats_lattice(uniform_matroid(2, 3))
    assert lat.bottom == frozenset() and lat.top == frozenset({1, 2, 3})
    assert sorted(sorted(f) for f in lat.flats[1]) == [[1], [2], [3]]
    assert [len(layer) for layer in flats_lattice(uniform_matroid(2, 2)).flats] == [1, 2, 1]
    assert [len(layer) for layer in flats_lattice(matroid_from_graph(K4_EDGES)).flats] == [1, 6, 7, 1]


def test_mobius_examples():
    assert mobius_top(flats_lattice(uniform_matroid(2, 3))) == 2
    assert mobius_top(flats_lattice(uniform_matroid(2, 2))) == 1
    assert mobius_top(flats_lattice(uniform_matroid(3, 3))) == -1


def test_mobius_of_uniform_matroids():
    # |mu| of U_{r,n} is binom(n-1, r-1)
    from math import comb

    for r, n in [(2, 4), (2, 6), (3, 5), (3, 6), (4, 6)]:
        assert abs(mobius_top(flats_lattice(uniform_matroid(r, n)))) == comb(n - 1, r - 1)


def test_bergman_examples():
    f = bergman_fan(uniform_matroid(2, 2))
    assert f.lineality == ((1, 1),) and sorted(f.rays) == [(0, 1), (1, 0)]
    assert reduced_betti(crosscut_complex(f)) == [1]
    f = bergman_fan(uniform_matroid(2, 3))
    assert len(f.rays) == 3 and f.dimension == 2
    assert reduced_betti(crosscut_complex(f)) == [2]
    k4 = bergman_fan(matroid_from_graph(K4_EDGES))
    assert len(k4.rays) == 13
    assert reduced_betti(crosscut_complex(k4))[-1] == abs(mobius_top(flats_lattice(matroid_from_graph(K4_EDGES))))


def test_loops_rejected():
    with pytest.raises(MatroidError, match="loopless required"):
        bergman_fan(matroid_from_bases(3, [[1, 2]]))


def test_link_is_order_complex_of_proper_part():
    for m in matroids().values():
        lat = flats_lattice(m)
        proper = lat.proper_part()
        chains = []
        stack = [(f,) for f in proper]
        while stack:
            c = stack.pop()
            ups = [g for g in proper if c[-1] < g]
            if not ups:
                chains.append(c)
            stack += [c + (g,) for g in ups]
        direct = SimplicialComplex(chains, vertices=proper)
        fan = bergman_fan(m)
        cross = crosscut_complex(fan)
        flat_of = {k: frozenset(i + 1 for i, x in enumerate(r) if x) for k, r in enumerate(fan.rays)}
        relabelled = {frozenset(flat_of[cross.vertices[i]] for i in f) for f in cross.facets}
        assert relabelled == direct.labelled_facets()
        assert reduced_betti(order_complex(link_poset(fan))) == reduced_betti(direct)


def test_json_sources():
    assert matroid_from_json({"graph": [[1, 2], [2, 3], [1, 3]]}).rank == 2
    with pytest.raises(MatroidError):
        matroid_from_json({"foo": 1})
