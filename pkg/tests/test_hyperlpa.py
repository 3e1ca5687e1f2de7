import random

import pytest

import corpus
from gammalg.algpres import homogeneity_check, rename_equal
from gammalg.gamma_monoid import GradeGroup, MWord, Z
from gammalg.hyperlpa import (Edge, Graph, GraphError, HEdge, Hypergraph, WeightMap, coherent, graph_rename,
                              graph_to_hypergraph, hyper_lpa_presentation, hyper_vgr_presentation,
                              localization_chain_check, lpa_presentation, path_algebra_presentation, rose,
                              talented_presentation, weighted_graph_to_hypergraph)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(("v", "v"))
    with pytest.raises(GraphError):
        Graph(("v",), (Edge("e", "v", "w"),))
    with pytest.raises(GraphError):
        Graph(("v",), (Edge("v", "v", "v"),))
    E = Graph(("w", "v"), (Edge("b", "v", "w"), Edge("a", "v", "v")))
    assert E.vertices == ("v", "w") and [e.name for e in E.edges] == ["a", "b"]
    assert E.sinks() == ["w"] and E.regular() == ["v"]


def test_hypergraph_validation():
    with pytest.raises(GraphError):
        Hypergraph(("v",), (HEdge("h", (), ("v",)),))
    with pytest.raises(GraphError):
        Hypergraph(("v",), (HEdge("h", ("v",), ("w",)),))
    H = Hypergraph(("v",), (HEdge("h", ("v",), ("v",)),))
    with pytest.raises(GraphError):
        WeightMap(Z, {"h": ((Z(1),), (Z(0),))}).check(H)


def test_weights_from_full_table():
    H = Hypergraph(("u", "v"), (HEdge("h", ("u", "v"), ("u", "v")),))
    w = {("h", 1, 1): Z(1), ("h", 1, 2): Z(2), ("h", 2, 1): Z(0), ("h", 2, 2): Z(1)}
    wm = WeightMap.from_weights(Z, H, w)
    assert coherent(H, wm)
    assert all(wm.weight("h", i, j) == w[("h", i, j)] for i in (1, 2) for j in (1, 2))
    w[("h", 2, 2)] = Z(5)
    with pytest.raises(GraphError):
        WeightMap.from_weights(Z, H, w)


def test_graph_to_hypergraph_weights():
    H, w = graph_to_hypergraph(rose(2))
    assert [h.name for h in H.hedges] == ["h_v"]
    assert w.table["h_v"] == ((Z(0),), (Z(1), Z(1)))
    H2, w2 = weighted_graph_to_hypergraph(rose(1), {"v": 3})
    assert H2.hedge("h_v").src == ("v", "v", "v")
    with pytest.raises(GraphError):
        graph_to_hypergraph(rose(1), GradeGroup.trivial())


def test_lpa_relations_for_rose2():
    L = lpa_presentation(rose(2))
    rels = {repr(r) for r in L.relations}
    assert "e2 e2* + e1 e1* - v = 0" in rels
    assert "e1* e2 = 0" in rels
    assert "e1* e1 - v = 0" in rels
    assert not homogeneity_check(L)
    assert L.degrees()["e1*"] == Z(-1)


def test_hyper_lpa_is_lpa_for_graphs():
    for E in corpus.fixture_graphs():
        H, w = graph_to_hypergraph(E)
        to_lpa, _ = graph_rename(E)
        LH = hyper_lpa_presentation(H, w)
        assert rename_equal(LH, lpa_presentation(E), {k: to_lpa.get(k, k) for k in LH.names()}).equal


def test_talented_and_vgr_agree_on_graphs():
    for E in corpus.fixture_graphs():
        H, w = graph_to_hypergraph(E)
        assert hyper_vgr_presentation(H, w) == talented_presentation(E)


def test_talented_relation_shape():
    T = talented_presentation(rose(3))
    (r,) = T.relations
    assert {r.lhs, r.rhs} == {MWord.gen("v", Z(0)), MWord.gen("v", Z(1), 3)}
    assert T.order_unit == MWord.gen("v", Z(0))


def test_path_algebra_has_no_ghosts():
    P = path_algebra_presentation(rose(2))
    assert not any(n.endswith("*") for n in P.names())


@pytest.mark.parametrize("seed", range(6))
def test_chain_check_on_random_graphs(seed):
    E = corpus.random_graph(random.Random(seed))
    rep = localization_chain_check(E)
    assert rep.passed, rep.checks
    assert len(rep.checks) == 4


def test_incoherent_weights_rejected():
    H = Hypergraph(("v",), (HEdge("h", ("v", "v"), ("v",)),))
    w = WeightMap(Z, {"h": ((Z(0), Z(1)), (Z(1),))})
    assert coherent(H, w)  # (a, b) storage is coherent by construction
    hyper_lpa_presentation(H, w)
