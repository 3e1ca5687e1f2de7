import pytest

import corpus
import oracles
from gammalg.gamma_monoid import (MonoidError, MonoidPresentation, MRelation, MWord, Z, free_presentation,
                                  same_presentation)
from gammalg.hyperlpa import Edge, Graph, graph_to_hypergraph, hyper_vgr_presentation, rose, talented_presentation
from gammalg.vmonoid import (HomBounds, ProjectiveSpec, RealizationError, candidate_words, fresh_names,
                             grading_structure_check, hom_search, realize, replay, vgr_adjoin_split, vgr_quotient)


def test_projective_spec_round_trip():
    w = MWord.gen("v", Z(1), 2) + MWord.gen("u", Z(0))
    P = ProjectiveSpec.from_word(w)
    assert len(P.summands) == 3 and P.word() == w


def test_quotient_and_split():
    F = free_presentation(Z, ["v"])
    P = ProjectiveSpec((("v", Z(0)),))
    Q = ProjectiveSpec((("v", Z(1)), ("v", Z(1))))
    assert same_presentation(vgr_quotient(F, P, Q), talented_presentation(rose(2)))
    with pytest.raises(MonoidError):
        vgr_quotient(F, ProjectiveSpec(()), Q)
    with pytest.raises(MonoidError):
        vgr_quotient(F, ProjectiveSpec((("w", Z(0)),)), Q)
    S = vgr_adjoin_split(F, Q)
    assert S.generators == ("P1", "P2", "v")
    assert fresh_names(S) == ["P3", "P4"]


def test_realize_rejects_named_conditions():
    with pytest.raises(RealizationError, match="order unit"):
        realize(MonoidPresentation(Z, ("u", "v"), (), MWord.gen("v", Z(0))))
    with pytest.raises(RealizationError, match="zero side"):
        realize(MonoidPresentation(Z, ("v",), (MRelation(MWord.gen("v", Z(0)), MWord()),), MWord.gen("v", Z(0))))
    with pytest.raises(RealizationError, match="generator"):
        realize(MonoidPresentation(Z, (), (), MWord()))


def test_realize_general_relation():
    M = MonoidPresentation(Z, ("u", "v"), (MRelation(MWord.gen("u", Z(0)) + MWord.gen("v", Z(2)),
                                                    MWord.gen("u", Z(-1), 3)),),
                           MWord.gen("u", Z(0)) + MWord.gen("v", Z(0)))
    rep = realize(M)
    assert rep.verified
    assert same_presentation(hyper_vgr_presentation(rep.hypergraph, rep.weights), M)


def test_grading_report_shapes():
    res = grading_structure_check(*graph_to_hypergraph(rose(2)))
    assert res["strongly_graded"].is_equal
    assert res["crossed_product"].is_not_equal
    E = Graph(("u", "v"), (Edge("a", "u", "v"), Edge("b", "v", "u")))
    res = grading_structure_check(*graph_to_hypergraph(E))
    assert res["strongly_graded"].is_equal


def test_candidate_enumeration_matches_oracle_count():
    for bounds in (HomBounds(1, 0, 1), HomBounds(2, 1, 2), HomBounds(4, 2, 3)):
        count, _ = oracles.rose_hom_enumeration(2, 2, bounds.max_coeff, bounds.shift_radius, bounds.max_support)
        cands = candidate_words(rose(2), bounds)
        assert len(cands) == count and cands[0] == MWord()


@pytest.mark.parametrize("src,dst", [(2, 2), (3, 3), (2, 4), (4, 2), (1, 1), (4, 4)])
def test_rose_hom_search_agrees_with_valuation_oracle(src, dst):
    b = HomBounds(2, 1, 2)
    res = hom_search(rose(src), rose(dst), b, True)
    _, sols = oracles.rose_hom_enumeration(src, dst, 2, 1, 2)
    assert res.found == bool(sols)
    if res.found:
        assert replay(res.certificate, rose(dst))
        cand = res.certificate.assignment["v"]
        assert oracles.rose_valuation(dst, cand) == 1


def test_unpointed_search_finds_zero_map():
    res = hom_search(rose(4), rose(2), HomBounds(1, 0, 1), require_pointed=False)
    assert res.found and res.certificate.assignment["v"] == MWord()
    assert not res.certificate.nonvanishing


def test_bounds_validation():
    with pytest.raises(ValueError):
        HomBounds(0, 0, 1)


def test_realization_of_sink_free_fixtures():
    for E in corpus.sink_free_graphs()[:5]:
        assert realize(talented_presentation(E)).verified
