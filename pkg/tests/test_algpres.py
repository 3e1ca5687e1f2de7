from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from gammalg.algpres import (AGen, AlgebraPresentation, ARelation, Poly, PresentationError, Rule, RuleError,
                             bounded_rewrite_prove, degree_of_word, fmt_poly, homogeneity_check, rename_equal,
                             verify_trace)
from gammalg.field import QQ, Field, FpElem, fmt_scalar
from gammalg.gamma_monoid import Z
from gammalg.hyperlpa import lpa_presentation, rose

W = Poly.word


def test_field_basics():
    F7 = Field.parse("Fp:7")
    assert F7(3) * F7(5) == F7(1)
    assert F7(Fraction(1, 2)) == F7(4)
    assert Field.parse("Q") == QQ
    assert fmt_scalar(Fraction(-3, 4)) == "-3/4"
    assert isinstance(F7(2), FpElem)
    with pytest.raises(ValueError):
        Field.parse("R")


def test_poly_normalizes():
    p = W("a", "b") + W("a", "b") - W("a", "b", coeff=2) + W("c")
    assert p == W("c")
    assert fmt_poly(W("a") - W("b", "c", coeff=3)) == "-3 b c + a"
    assert (W("a") * W("b")).words() == [("a", "b")]
    assert not Poly.zero()


def test_relation_leading_coefficient_is_one():
    r = ARelation(W("a", "b", coeff=3) - W("c"))
    assert r.poly.items()[0][1] == 1
    assert r == ARelation(W("c") - W("a", "b", coeff=3))
    assert ARelation.eq(W("a"), W("a")).is_trivial()


def _toy():
    gens = (AGen("x", Z(1)), AGen("y", Z(-1)), AGen("u", Z(0)))
    rels = (ARelation.eq(W("x", "y"), W("u")), ARelation.eq(W("u", "u"), W("u")),
            ARelation.eq(W("u", "x"), W("x")))
    return AlgebraPresentation(Z, gens, rels)


def test_presentation_validation():
    p = _toy()
    assert p.names() == ["u", "x", "y"]
    assert degree_of_word(p, ("x", "y", "x")) == Z(1)
    assert homogeneity_check(p) == []
    bad = p.extend([ARelation(W("x") - W("u"))])
    assert homogeneity_check(bad)
    with pytest.raises(PresentationError):
        AlgebraPresentation(Z, p.generators, (ARelation(W("z")),))


def test_rename_equal_reports_differences():
    p = _toy()
    m = {"x": "a", "y": "b", "u": "c"}
    q = AlgebraPresentation(Z, tuple(AGen(m[g.name], g.degree) for g in p.generators),
                            tuple(ARelation(r.poly.rename(m)) for r in p.relations))
    assert rename_equal(p, q, m).equal
    q2 = q.extend([ARelation(W("a", "a"))])
    rep = rename_equal(p, q2, m)
    assert not rep.equal and len(rep.only_in_second) == 1
    with pytest.raises(PresentationError):
        rename_equal(p, q, {"x": "a", "y": "a", "u": "c"})
    with pytest.raises(PresentationError):
        rename_equal(p, q, {"x": "b", "y": "a", "u": "c"})


def _plain(poly):
    return {w: Fraction(c) for w, c in poly.items()}


def test_prover_on_lpa_identity_and_oracle_replay():
    L = lpa_presentation(rose(2))
    rules = [Rule(("e1*", "e1"), W("v")), Rule(("e1*", "e2"), Poly.zero()), Rule(("v", "v"), W("v")),
             Rule(("e1", "v"), W("e1"))]
    # e1* e1 e1* e1 = v
    ident = W("e1*", "e1", "e1*", "e1") - W("v")
    res = bounded_rewrite_prove(L, ident, rules)
    assert res.proved
    assert verify_trace(L, ident, rules, res.trace)
    rels = [_plain(W(*r.lhs) - r.rhs) for r in rules]
    left = oracles.replay_trace(_plain(ident), rels, [(s.coeff, s.left, s.rule, s.right) for s in res.trace])
    assert left == {}


def test_prover_rejects_foreign_rules_and_reports_unknown():
    L = lpa_presentation(rose(2))
    with pytest.raises(RuleError):
        bounded_rewrite_prove(L, W("v"), [Rule(("v",), Poly.zero())])
    res = bounded_rewrite_prove(L, W("e1", "e1*") - W("v"), [Rule(("v", "v"), W("v"))], depth=2)
    assert not res.proved and res.status == "Unknown"


def test_trace_verifier_catches_tampering():
    L = lpa_presentation(rose(2))
    rules = [Rule(("e1*", "e1"), W("v"))]
    ident = W("e1*", "e1") - W("v")
    res = bounded_rewrite_prove(L, ident, rules)
    assert res.proved
    assert not verify_trace(L, ident + W("v"), rules, res.trace)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(["e1", "e2", "e1*", "e2*", "v"]), min_size=1, max_size=5))
def test_normal_forms_of_lpa_words_are_sound(word):
    """Whatever the prover does with w - w is proved trivially, and traces of w = w' always replay."""
    L = lpa_presentation(rose(2))
    rules = [Rule(("e1*", "e1"), W("v")), Rule(("e2*", "e2"), W("v")), Rule(("e1*", "e2"), Poly.zero()),
             Rule(("e2*", "e1"), Poly.zero()), Rule(("v", "v"), W("v")), Rule(("e1", "v"), W("e1")),
             Rule(("e2", "v"), W("e2")), Rule(("v", "e1*"), W("e1*")), Rule(("v", "e2*"), W("e2*")),
             Rule(("v", "e1"), W("e1")), Rule(("v", "e2"), W("e2")), Rule(("e1*", "v"), W("e1*")),
             Rule(("e2*", "v"), W("e2*"))]
    target = W(*word) * W("v") - W(*word)
    res = bounded_rewrite_prove(L, target, rules, depth=1)
    if res.proved:
        rels = [_plain(W(*r.lhs) - r.rhs) for r in rules]
        steps = [(s.coeff, s.left, s.rule, s.right) for s in res.trace]
        assert oracles.replay_trace(_plain(target), rels, steps) == {}
