"""Text formats for monoids, graphs, weighted hypergraphs and Bergman data.

``parse`` reads one document; ``dump`` prints its canonical single-line form.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algpres import AlgebraPresentation, fmt_poly
from .bergman import BergmanData, BergmanPair
from .field import Field, fmt_scalar
from .gamma_monoid import GradeElement, GradeGroup, MonoidError, MonoidPresentation, MRelation, MWord
from .hyperlpa import Edge, Graph, GraphError, HEdge, Hypergraph, WeightMap
from .linalg_ss import IdempotentError, RingElem, SemisimpleRing, validate_idempotent

KINDS = ("monoid", "graph", "hypergraph", "bergman")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        where = "line %d, column %d" % (line, col)
        extra = " (expected %s)" % " or ".join(self.expected) if self.expected else ""
        super().__init__("%s: %s%s" % (where, message, extra))


@dataclass(frozen=True)
class SpecDocument:
    kind: str
    name: str
    payload: Any  # MonoidPresentation | Graph | (Hypergraph, WeightMap) | BergmanData


# ---------------------------------------------------------------- lexer

_TOKEN = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<arrow>->)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_.']*\*?)
  | (?P<punct>[{}()\[\],;:=+\-^/])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str  # name | num | punct | eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Tok]:
    out, pos, line, lstart = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], line, pos - lstart + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Tok("punct" if kind == "arrow" else kind, m.group(), line, pos - lstart + 1))
        for k, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                lstart = pos + k + 1
        pos = m.end()
    out.append(Tok("eof", "", line, pos - lstart + 1))
    return out


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def fail(self, msg, expected=(), tok=None):
        t = tok or self.tok
        raise ParseError(msg, t.line, t.col, expected)

    def at(self, text) -> bool:
        return self.tok.kind in ("punct", "name") and self.tok.text == text

    def eat(self, text) -> Tok:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            self.fail("unexpected %r" % shown, ["'%s'" % text])
        t = self.tok
        self.i += 1
        return t

    def name(self, what="name") -> Tok:
        if self.tok.kind != "name":
            self.fail("unexpected %r" % (self.tok.text or "end of input"), [what])
        t = self.tok
        self.i += 1
        return t

    def uint(self) -> int:
        if self.tok.kind != "num":
            self.fail("unexpected %r" % (self.tok.text or "end of input"), ["integer"])
        t = self.tok
        self.i += 1
        return int(t.text)

    def int_(self) -> int:
        if self.at("-"):
            self.i += 1
            return -self.uint()
        return self.uint()

    def rational(self) -> Fraction:
        n = self.int_()
        if self.at("/"):
            self.i += 1
            tok = self.tok
            d = self.uint()
            if d == 0:
                self.fail("zero denominator", tok=tok)
            return Fraction(n, d)
        return Fraction(n)

    # --- shared pieces

    def group(self) -> GradeGroup:
        if self.tok.kind == "num" and self.tok.text == "1":
            self.i += 1
            return GradeGroup.trivial()
        rank, tors = 0, []
        while True:
            self.eat("Z")
            if self.at("^"):
                self.i += 1
                rank += self.uint()
            elif self.at("/"):
                self.i += 1
                tok = self.tok
                m = self.uint()
                if m < 2:
                    self.fail("cyclic factor needs order at least 2", tok=tok)
                tors.append(m)
            else:
                rank += 1
            if not self.at("x"):
                break
            self.i += 1
        return GradeGroup(rank, tuple(tors))

    def grade(self, G: GradeGroup) -> GradeElement:
        tok = self.tok
        if tok.kind == "num" and tok.text == "0":
            self.i += 1
            return G.zero()
        self.eat("[")
        free, res = [], []
        if not self.at(";") and not self.at("]"):
            free.append(self.int_())
            while self.at(","):
                self.i += 1
                free.append(self.int_())
        if self.at(";"):
            self.i += 1
            res.append(self.int_())
            while self.at(","):
                self.i += 1
                res.append(self.int_())
        self.eat("]")
        if len(free) != G.rank or len(res) != len(G.torsion):
            self.fail("grade element has the wrong shape for %s" % G, tok=tok)
        for r, m in zip(res, G.torsion):
            if not 0 <= r < m:
                self.fail("residue %d is not reduced modulo %d" % (r, m), tok=tok)
        return G.element(free, res)

    def names(self, stop=";") -> list[Tok]:
        out = []
        if self.at(stop):
            return out
        out.append(self.name())
        while self.at(","):
            self.i += 1
            out.append(self.name())
        if not self.at(stop):
            self.fail("unexpected %r" % (self.tok.text or "end of input"), ["','", "'%s'" % stop])
        return out

    def word(self, G: GradeGroup, gens: set) -> MWord:
        tok = self.tok
        if self.at(";") or self.at("=") or self.at("}"):
            self.fail("empty relation side", ["word"])
        if tok.kind == "num" and tok.text == "0" and self.toks[self.i + 1].kind != "name":
            self.i += 1
            return MWord()
        terms = []
        while True:
            n = 1
            if self.tok.kind == "num":
                n = self.uint()
            g = self.name("generator")
            if g.text not in gens:
                self.fail("undeclared generator %r" % g.text, tok=g)
            gr = self.grade(G) if self.at("[") else G.zero()
            terms.append(((g.text, gr), n))
            if not self.at("+"):
                break
            self.i += 1
        return MWord(terms)

    def grade_tuple(self, G) -> list[GradeElement]:
        self.eat("(")
        out = [self.grade(G)]
        while self.at(","):
            self.i += 1
            out.append(self.grade(G))
        self.eat(")")
        return out

    def header(self, kind):
        self.eat(kind)
        return self.name("document name").text

    # --- documents

    def document(self) -> SpecDocument:
        t = self.tok
        if t.kind != "name" or t.text not in KINDS:
            self.fail("unexpected %r" % (t.text or "end of input"), ["'%s'" % k for k in KINDS])
        doc = getattr(self, "_" + t.text)()
        if self.tok.kind != "eof":
            self.fail("trailing input %r" % self.tok.text, ["end of input"])
        return doc

    def _monoid(self) -> SpecDocument:
        name = self.header("monoid")
        self.eat("over")
        G = self.group()
        self.eat("{")
        self.eat("gens")
        self.eat(":")
        gtoks = self.names()
        gens = set()
        for t in gtoks:
            if t.text in gens:
                self.fail("duplicate generator %r" % t.text, tok=t)
            gens.add(t.text)
        self.eat(";")
        unit, rels = None, []
        if self.at("unit"):
            self.i += 1
            self.eat(":")
            unit = self.word(G, gens)
            self.eat(";")
        while self.at("rel"):
            self.i += 1
            self.eat(":")
            lhs = self.word(G, gens)
            self.eat("=")
            rhs = self.word(G, gens)
            self.eat(";")
            rels.append(MRelation(lhs, rhs))
        if not self.at("}"):
            self.fail("unexpected %r" % (self.tok.text or "end of input"),
                      ["'rel'", "'}'"] if rels or unit is not None else ["'unit'", "'rel'", "'}'"])
        self.i += 1
        return SpecDocument("monoid", name, MonoidPresentation(G, tuple(t.text for t in gtoks), tuple(rels), unit))

    def _vertices(self):
        self.eat("vertices")
        self.eat(":")
        vt = self.names()
        seen = set()
        for t in vt:
            if t.text in seen:
                self.fail("duplicate vertex %r" % t.text, tok=t)
            seen.add(t.text)
        self.eat(";")
        return [t.text for t in vt], seen

    def _vertex(self, verts):
        t = self.name("vertex")
        if t.text not in verts:
            self.fail("undeclared vertex %r" % t.text, tok=t)
        return t.text

    def _graph(self) -> SpecDocument:
        name = self.header("graph")
        self.eat("{")
        vs, vset = self._vertices()
        edges, seen = [], set(vset)
        while self.at("edge"):
            self.i += 1
            t = self.name("edge name")
            if t.text in seen:
                self.fail("duplicate name %r" % t.text, tok=t)
            seen.add(t.text)
            self.eat(":")
            s = self._vertex(vset)
            self.eat("->")
            r = self._vertex(vset)
            self.eat(";")
            edges.append(Edge(t.text, s, r))
        if not self.at("}"):
            self.fail("unexpected %r" % (self.tok.text or "end of input"), ["'edge'", "'}'"])
        self.i += 1
        return SpecDocument("graph", name, Graph(tuple(vs), tuple(edges), name))

    def _vertex_tuple(self, vset):
        self.eat("(")
        out = [self._vertex(vset)]
        while self.at(","):
            self.i += 1
            out.append(self._vertex(vset))
        self.eat(")")
        return out

    def _hypergraph(self) -> SpecDocument:
        name = self.header("hypergraph")
        self.eat("over")
        G = self.group()
        self.eat("{")
        vs, vset = self._vertices()
        hedges, table, seen = [], {}, set()
        while self.at("hedge"):
            self.i += 1
            t = self.name("hyperedge name")
            if t.text in seen:
                self.fail("duplicate hyperedge %r" % t.text, tok=t)
            seen.add(t.text)
            self.eat(":")
            src = self._vertex_tuple(vset)
            self.eat("->")
            rng = self._vertex_tuple(vset)
            self.eat("weights")
            wt = self.tok
            if self.at("w"):
                table[t.text] = self._full_weights(G, t.text, len(src), len(rng), wt)
            else:
                self.eat("a")
                self.eat("=")
                a = self.grade_tuple(G)
                self.eat("b")
                self.eat("=")
                b = self.grade_tuple(G)
                if len(a) != len(src) or len(b) != len(rng):
                    self.fail("weight vectors of %s have the wrong length" % t.text, tok=wt)
                a1 = a[0]
                table[t.text] = (tuple(x - a1 for x in a), tuple(y - a1 for y in b))
            self.eat(";")
            hedges.append(HEdge(t.text, tuple(src), tuple(rng)))
        if not self.at("}"):
            self.fail("unexpected %r" % (self.tok.text or "end of input"), ["'hedge'", "'}'"])
        self.i += 1
        H = Hypergraph(tuple(vs), tuple(hedges), name)
        return SpecDocument("hypergraph", name, (H, WeightMap(G, table)))

    def _full_weights(self, G, hname, I, J, wt):
        """``w=((w11, w12), (w21, w22))``, checked for coherence."""
        self.eat("w")
        self.eat("=")
        self.eat("(")
        rows = [self.grade_tuple(G)]
        while self.at(","):
            self.i += 1
            rows.append(self.grade_tuple(G))
        self.eat(")")
        if len(rows) != I or any(len(r) != J for r in rows):
            self.fail("weight table of %s has the wrong shape" % hname, tok=wt)
        b = tuple(rows[0])
        a = tuple(rows[0][0] - rows[i][0] for i in range(I))
        for i in range(I):
            for j in range(J):
                if rows[i][j] != b[j] - a[i]:
                    self.fail("incoherent weights on %s at (%d,%d)" % (hname, i + 1, j + 1), tok=wt)
        return a, b

    def _bergman(self) -> SpecDocument:
        name = self.header("bergman")
        self.eat("over")
        G = self.group()
        self.eat("field")
        ft = self.name("field")
        spec = ft.text
        if spec == "Fp":
            self.eat(":")
            spec = "Fp:%d" % self.uint()
        try:
            fld = Field.parse(spec)
        except ValueError as exc:
            self.fail(str(exc), tok=ft)
        self.eat("{")
        self.eat("components")
        self.eat(":")
        ct = self.names()
        comps = []
        for t in ct:
            if t.text in comps:
                self.fail("duplicate component %r" % t.text, tok=t)
            comps.append(t.text)
        self.eat(";")
        if not comps:
            self.fail("at least one component is required", tok=ct[0] if ct else self.tok)
        ring = SemisimpleRing(tuple(comps), fld)
        pairs, seen = [], set()
        while self.at("pair"):
            self.i += 1
            t = self.name("pair label")
            if t.text in seen:
                self.fail("duplicate pair %r" % t.text, tok=t)
            seen.add(t.text)
            self.eat(":")
            self.eat("e")
            e = self._idem(ring, G)
            self.eat(",")
            self.eat("f")
            f = self._idem(ring, G)
            self.eat(";")
            pairs.append(BergmanPair(t.text, e, f))
        if not self.at("}"):
            self.fail("unexpected %r" % (self.tok.text or "end of input"), ["'pair'", "'}'"])
        self.i += 1
        return SpecDocument("bergman", name, BergmanData(ring, G, tuple(pairs)))

    def _idem(self, ring, G):
        self.eat("=")
        mt = self.tok
        self.eat("[")
        rows = [self._row(ring)]
        while self.at(","):
            self.i += 1
            rows.append(self._row(ring))
        self.eat("]")
        self.eat("shifts")
        shifts = self.grade_tuple(G)
        n = len(rows)
        if any(len(r) != n for r in rows) or len(shifts) != n:
            self.fail("matrix must be square and match its shift vector", tok=mt)
        try:
            return validate_idempotent(ring, rows, shifts)
        except IdempotentError as exc:
            self.fail("not a homogeneous idempotent: %s" % exc, tok=mt)

    def _row(self, ring):
        self.eat("[")
        out = [self._entry(ring)]
        while self.at(","):
            self.i += 1
            out.append(self._entry(ring))
        self.eat("]")
        return out

    def _entry(self, ring: SemisimpleRing) -> RingElem:
        if self.at("eps"):
            self.i += 1
            self.eat("(")
            t = self.name("component")
            if t.text not in ring.components:
                self.fail("unknown component %r" % t.text, tok=t)
            self.eat(")")
            return ring.eps(t.text)
        if self.at("("):
            tok = self.tok
            self.i += 1
            vals = [self.rational()]
            while self.at(","):
                self.i += 1
                vals.append(self.rational())
            self.eat(")")
            if len(vals) != ring.size:
                self.fail("entry needs %d components" % ring.size, tok=tok)
            return ring.elem(vals)
        return ring.scalar(self.rational())


def parse(text: str) -> SpecDocument:
    p = _Parser(text)
    try:
        return p.document()
    except (MonoidError, GraphError) as exc:
        t = p.tok
        raise ParseError(str(exc), t.line, t.col) from None


# ---------------------------------------------------------------- printing


def fmt_grade(g: GradeElement) -> str:
    return "0" if g.is_zero() else repr(g)


def _tuple(gs) -> str:
    return "(%s)" % ", ".join(fmt_grade(g) for g in gs)


def _relation(r: MRelation) -> str:
    a, b = sorted([r.lhs, r.rhs], key=MWord.sort_key)
    return "%r = %r" % (a, b)


def _entry(ring: SemisimpleRing, x: RingElem) -> str:
    return "(%s)" % ", ".join(fmt_scalar(c) for c in x.vals)


def dump(doc: SpecDocument) -> str:
    k, name, pl = doc.kind, doc.name, doc.payload
    items = []
    if k == "monoid":
        head = "monoid %s over %s" % (name, pl.group)
        items.append("gens: %s" % ", ".join(pl.generators))
        if pl.order_unit is not None:
            items.append("unit: %r" % pl.order_unit)
        items += ["rel: %s" % _relation(r) for r in sorted(pl.relations, key=lambda r: _relation(r))]
    elif k == "graph":
        head = "graph %s" % name
        items.append("vertices: %s" % ", ".join(pl.vertices))
        items += ["edge %s: %s -> %s" % (e.name, e.s, e.r) for e in pl.edges]
    elif k == "hypergraph":
        H, w = pl
        head = "hypergraph %s over %s" % (name, w.group)
        items.append("vertices: %s" % ", ".join(H.vertices))
        for h in H.hedges:
            a, b = w.table[h.name]
            items.append("hedge %s: (%s) -> (%s) weights a=%s b=%s" % (
                h.name, ", ".join(h.src), ", ".join(h.rng), _tuple(a), _tuple(b)))
    elif k == "bergman":
        ring = pl.ring
        head = "bergman %s over %s field %s" % (name, pl.group, ring.field.name)
        items.append("components: %s" % ", ".join(ring.components))
        for p in pl.pairs:
            mats = []
            for m in (p.e, p.f):
                rows = ", ".join("[%s]" % ", ".join(_entry(ring, x) for x in row) for row in m.entries)
                mats.append("[%s] shifts %s" % (rows, _tuple(m.shifts)))
            items.append("pair %s: e = %s, f = %s" % (p.label, mats[0], mats[1]))
    else:
        raise ValueError("unknown document kind %r" % k)
    return "%s { %s }\n" % (head, " ".join(s + ";" for s in items))


def monoid_doc(pres: MonoidPresentation, name: str = "M") -> SpecDocument:
    return SpecDocument("monoid", name, pres)


def graph_doc(E: Graph) -> SpecDocument:
    return SpecDocument("graph", E.name, E)


def hypergraph_doc(H: Hypergraph, w: WeightMap, name: str = None) -> SpecDocument:
    return SpecDocument("hypergraph", name or H.name, (H, w))


def bergman_doc(data: BergmanData, name: str = "B") -> SpecDocument:
    return SpecDocument("bergman", name, data)


def format_algebra(p: AlgebraPresentation, name: str = "A") -> str:
    """Deterministic multi-line listing: header, generator degrees, one relation per line."""
    flags = [("unital" if p.unital else "nonunital")]
    if p.graded:
        flags.append("graded by %s" % p.group)
    lines = ["algebra %s over %s %s" % (name, p.field.name, ", ".join(flags)), "gens:"]
    for g in p.generators:
        lines.append("  %s : %s" % (g.name, fmt_grade(g.degree)))
    lines.append("relations:")
    for r in p.relations:
        lines.append("  %s = 0" % fmt_poly(r.poly))
    return "\n".join(lines) + "\n"


def parse_word(text: str, pres: MonoidPresentation) -> MWord:
    """A monoid word over the generators of ``pres``, e.g. ``2 p[1] + q``."""
    p = _Parser(text)
    w = p.word(pres.group, set(pres.generators))
    if p.tok.kind != "eof":
        p.fail("trailing input %r" % p.tok.text, ["'+'", "end of input"])
    return w


def parse_window(text: str, G: GradeGroup) -> list[GradeElement]:
    """Comma-separated grade elements; bare integers are allowed when the group is Z."""
    p = _Parser(text)
    out = []
    while True:
        if G.rank == 1 and not G.torsion and (p.tok.kind == "num" or p.at("-")):
            out.append(G(p.int_()))
        else:
            out.append(p.grade(G))
        if not p.at(","):
            break
        p.i += 1
    if p.tok.kind != "eof":
        p.fail("trailing input %r" % p.tok.text, ["','", "end of input"])
    return out
