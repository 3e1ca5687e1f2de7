import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import corpus
from gammalg import specio
from gammalg.gamma_monoid import GradeGroup, MRelation, MWord, Z
from gammalg.hyperlpa import rose, talented_presentation

HERE = Path(__file__).resolve().parent


def test_monoid_example():
    doc = specio.parse("monoid M over Z { gens: p; unit: p; rel: p = 2 p[1]; }")
    assert doc.kind == "monoid"
    T = talented_presentation(rose(2))
    pres = doc.payload
    assert pres.relations == (MRelation(MWord.gen("p", Z(0)), MWord.gen("p", Z(1), 2)),)
    assert pres.order_unit == MWord.gen("p", Z(0))
    assert specio.dump(specio.monoid_doc(T, "T")) == "monoid T over Z { gens: v; unit: v; rel: v = 2 v[1]; }\n"


def test_empty_monoid_canonical():
    assert specio.dump(specio.parse("monoid M over Z {gens:;}")) == "monoid M over Z { gens: ; }\n"


def test_graph_example():
    doc = specio.parse("graph E { vertices: v; edge e: v -> v; edge f: v -> v; }")
    assert len(doc.payload.edges) == 2 and doc.payload.vertices == ("v",)


@pytest.mark.parametrize("text,where,msg", [
    ("monoid M over Z { gens: p; rel: p = ; }", (1, 37), "empty relation side"),
    ("monoid M over Z { gens: p, p; }", (1, 28), "duplicate"),
    ("monoid M over Z x Z/2 { gens: p; rel: p[1;2] = p; }", (1, 40), "not reduced"),
    ("monoid M over Z^2 { gens: p; rel: p[1] = p; }", (1, 36), "wrong shape"),
    ("graph E { vertices: v; edge e: v -> w; }", (1, 37), "undeclared vertex"),
    ("graph E {\n  vertices: v;\n  edge e v -> v;\n}", (3, 10), "unexpected"),
    ("hypergraph H over Z { vertices: v; hedge h: (v, v) -> (v, v) weights w=(([0], [1]), ([1], [5])); }", (1, 70),
     "incoherent"),
    ("bergman B over Z field Q { components: s; pair u: e = [[2]] shifts (0), f = [[1]] shifts (0); }",
     (1, 55), "idempotent"),
    ("bergman B over Z field R { components: s; }", (1, 24), "unknown field"),
    ("stack S { }", (1, 1), "unexpected"),
    ("graph E { vertices: v; } trailing", (1, 26), "trailing"),
    ("graph E { vertices: v; edge e: v -> v; @ }", (1, 40), "unexpected character"),
])
def test_errors_carry_positions(text, where, msg):
    with pytest.raises(specio.ParseError) as ei:
        specio.parse(text)
    assert (ei.value.line, ei.value.col) == where
    assert msg in str(ei.value)


def test_expected_token_sets():
    with pytest.raises(specio.ParseError) as ei:
        specio.parse("graph E { vertices: v w; }")
    assert ei.value.expected == ("','", "';'")
    with pytest.raises(specio.ParseError) as ei:
        specio.parse("monoid M over Z { gens: p; foo }")
    assert "'rel'" in ei.value.expected and "'}'" in ei.value.expected


def _inserted_error_positions(text):
    toks = [t for t in specio.tokenize(text) if t.kind != "eof"]
    out = []
    for k, t in enumerate(toks):
        if k > 0 and toks[k - 1].text == "Z":
            continue  # '^' right after Z is legal
        # insert before token k on its own column
        lines = text.split("\n")
        line = lines[t.line - 1]
        lines[t.line - 1] = line[:t.col - 1] + "^ " + line[t.col - 1:]
        out.append(((t.line, t.col), "\n".join(lines)))
    return out


@pytest.mark.parametrize("golden", sorted((HERE / "golden").glob("*.golden")), ids=lambda p: p.stem)
def test_bad_token_is_reported_where_inserted(golden):
    text = golden.read_text()
    for where, bad in _inserted_error_positions(text):
        with pytest.raises(specio.ParseError) as ei:
            specio.parse(bad)
        assert (ei.value.line, ei.value.col) == where, bad


@pytest.mark.parametrize("golden", sorted((HERE / "golden").glob("*.golden")), ids=lambda p: p.stem)
def test_golden_files(golden):
    src = HERE / "fixtures" / golden.stem
    assert specio.dump(specio.parse(src.read_text())) == golden.read_text()


def test_weights_are_normalized_on_parse():
    doc = specio.parse("hypergraph H over Z { vertices: v; hedge h: (v, v) -> (v) weights a=([2], [3]) b=([5]); }")
    H, w = doc.payload
    assert w.table["h"] == ((Z(0), Z(1)), (Z(3),))


def test_fp_field_and_rationals():
    doc = specio.parse("bergman B over Z field Fp:3 { components: s; pair u: e = [[1]] shifts (0), "
                       "f = [[2, 2], [2, 2]] shifts (0, 0); }")
    assert doc.payload.ring.field.p == 3
    assert specio.dump(specio.parse(specio.dump(doc))) == specio.dump(doc)


def test_parse_word_and_window():
    T = talented_presentation(rose(2))
    assert specio.parse_word("2 v[1]", T) == MWord.gen("v", Z(1), 2)
    assert specio.parse_word("0", T) == MWord()
    with pytest.raises(specio.ParseError):
        specio.parse_word("w", T)
    assert specio.parse_window("0, -1,2", Z) == [Z(0), Z(-1), Z(2)]
    G = GradeGroup(1, (2,))
    assert specio.parse_window("[0;1]", G) == [G.element([0], [1])]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_round_trip_property(seed):
    rng = random.Random(seed)
    choice = rng.randrange(4)
    if choice == 0:
        doc = specio.monoid_doc(corpus.random_monoid(rng))
    elif choice == 1:
        doc = specio.graph_doc(corpus.random_graph(rng))
    elif choice == 2:
        doc = specio.hypergraph_doc(*corpus.random_hypergraph(rng))
    else:
        doc = specio.bergman_doc(corpus.random_bergman(rng))
    text = specio.dump(doc)
    again = specio.dump(specio.parse(text))
    assert again == text
    # whitespace is not significant
    assert specio.dump(specio.parse(text.replace(" ", "  ").replace(";", " ;\n"))) == text


def test_algebra_listing_is_deterministic():
    from gammalg.hyperlpa import lpa_presentation
    a = specio.format_algebra(lpa_presentation(rose(2)), "L")
    assert a.splitlines()[0] == "algebra L over Q unital, graded by Z"
    assert "  e1* : [-1]" in a.splitlines()
    assert a == specio.format_algebra(lpa_presentation(rose(2)), "L")
