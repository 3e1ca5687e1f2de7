"""Graphs, weighted hypergraphs and their algebra and monoid presentations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algpres import AGen, AlgebraPresentation, ARelation, Poly, PresentationError, rename_equal
from .field import QQ, Field
from .gamma_monoid import (GradeElement, GradeGroup, MonoidPresentation, MRelation, MWord, Z)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    name: str
    s: str
    r: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    name: str = "E"

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex names")
        es = tuple(sorted(self.edges, key=lambda e: e.name))
        names = [e.name for e in es]
        if len(set(names)) != len(names):
            raise GraphError("duplicate edge names")
        if set(names) & set(vs):
            raise GraphError("edge and vertex names overlap")
        for e in es:
            if e.s not in vs or e.r not in vs:
                raise GraphError("edge %s uses an undeclared vertex" % e.name)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    def out_edges(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.s == v]

    def regular(self) -> list[str]:
        return [v for v in self.vertices if self.out_edges(v)]

    def sinks(self) -> list[str]:
        return [v for v in self.vertices if not self.out_edges(v)]


def rose(n: int, vertex: str = "v") -> Graph:
    return Graph((vertex,), tuple(Edge("e%d" % (i + 1), vertex, vertex) for i in range(n)), "rose%d" % n)


@dataclass(frozen=True)
class HEdge:
    name: str
    src: tuple[str, ...]
    rng: tuple[str, ...]


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple[str, ...]
    hedges: tuple[HEdge, ...] = ()
    name: str = "H"

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex names")
        hs = tuple(sorted(self.hedges, key=lambda h: h.name))
        names = [h.name for h in hs]
        if len(set(names)) != len(names):
            raise GraphError("duplicate hyperedge names")
        for h in hs:
            if not h.src or not h.rng:
                raise GraphError("hyperedge %s needs nonempty source and range families" % h.name)
            bad = (set(h.src) | set(h.rng)) - set(vs)
            if bad:
                raise GraphError("hyperedge %s uses undeclared %s" % (h.name, ", ".join(sorted(bad))))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "hedges", hs)

    def hedge(self, name: str) -> HEdge:
        for h in self.hedges:
            if h.name == name:
                return h
        raise KeyError(name)


@dataclass(frozen=True)
class WeightMap:
    """Per hyperedge: row offsets a (a_1 = 0) and column values b; w(h_ij) = b_j - a_i."""
    group: GradeGroup
    table: dict = field(default_factory=dict)

    def check(self, H: Hypergraph) -> None:
        if set(self.table) != {h.name for h in H.hedges}:
            raise GraphError("weights must be given for exactly the hyperedges")
        for h in H.hedges:
            a, b = self.table[h.name]
            if len(a) != len(h.src) or len(b) != len(h.rng):
                raise GraphError("weight vectors of %s have the wrong length" % h.name)
            if not a[0].is_zero():
                raise GraphError("first row offset of %s must be 0" % h.name)
            for g in tuple(a) + tuple(b):
                if not self.group.contains(g):
                    raise GraphError("weight of %s outside %s" % (h.name, self.group))

    def weight(self, name: str, i: int, j: int) -> GradeElement:
        """w(h_ij), 1-based."""
        a, b = self.table[name]
        return b[j - 1] - a[i - 1]

    @classmethod
    def from_weights(cls, group: GradeGroup, H: Hypergraph, w: dict) -> "WeightMap":
        """Canonical storage from a full table w[(name, i, j)]; rejects incoherent input."""
        table = {}
        for h in H.hedges:
            I, J = len(h.src), len(h.rng)
            b = tuple(w[(h.name, 1, j)] for j in range(1, J + 1))
            a = tuple(w[(h.name, 1, 1)] - w[(h.name, i, 1)] for i in range(1, I + 1))
            for i in range(1, I + 1):
                for j in range(1, J + 1):
                    if w[(h.name, i, j)] != b[j - 1] - a[i - 1]:
                        raise GraphError("incoherent weights on %s at (%d,%d)" % (h.name, i, j))
            table[h.name] = (a, b)
        return cls(group, table)


def coherent(H: Hypergraph, w: WeightMap) -> bool:
    """w(h_ij) = w(h_{i1}) - w(h_{11}) + w(h_{1j}) for every symbol."""
    for h in H.hedges:
        for i in range(1, len(h.src) + 1):
            for j in range(1, len(h.rng) + 1):
                lhs = w.weight(h.name, i, j)
                rhs = w.weight(h.name, i, 1) - w.weight(h.name, 1, 1) + w.weight(h.name, 1, j)
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------- constructions


def hedge_name(v: str) -> str:
    return "h_%s" % v


def graph_to_hypergraph(E: Graph, group: GradeGroup = Z) -> tuple[Hypergraph, WeightMap]:
    return weighted_graph_to_hypergraph(E, {v: 1 for v in E.vertices}, group)


def weighted_graph_to_hypergraph(E: Graph, vw: dict, group: GradeGroup = Z) -> tuple[Hypergraph, WeightMap]:
    if group.rank < 1:
        raise GraphError("edges have degree 1, so the group needs a free part")
    one = group.element([1] + [0] * (group.rank - 1), [0] * len(group.torsion))
    hedges, table = [], {}
    for v in E.regular():
        k = vw.get(v, 0)
        if k <= 0:
            raise GraphError("vertex weight of %s must be positive" % v)
        outs = E.out_edges(v)
        hedges.append(HEdge(hedge_name(v), (v,) * k, tuple(e.r for e in outs)))
        table[hedge_name(v)] = ((group.zero(),) * k, (one,) * len(outs))
    return Hypergraph(E.vertices, tuple(hedges), E.name), WeightMap(group, table)


def _vertex_relations(vertices, fld) -> list[ARelation]:
    out = []
    total = Poly.zero(fld)
    for u in vertices:
        out.append(ARelation.eq(Poly.word(u, u, field=fld), Poly.word(u, field=fld)))
        for v in vertices:
            if u != v:
                out.append(ARelation(Poly.word(u, v, field=fld)))
        total = total + Poly.word(u, field=fld)
    out.append(ARelation.eq(total, Poly.const(1, fld)))
    return out


def hyper_gen(h: str, i: int, j: int, star: bool = False) -> str:
    return "%s%s[%d,%d]" % (h, "*" if star else "", i, j)


def hyper_lpa_presentation(H: Hypergraph, w: WeightMap, field: Field = QQ) -> AlgebraPresentation:
    w.check(H)
    if not coherent(H, w):
        raise GraphError("incoherent weights")
    G = w.group
    W = lambda *names: Poly.word(*names, field=field)
    gens = [AGen(v, G.zero()) for v in H.vertices]
    rels = _vertex_relations(H.vertices, field)
    for h in H.hedges:
        I, J = len(h.src), len(h.rng)
        for i in range(1, I + 1):
            for j in range(1, J + 1):
                x, xs = hyper_gen(h.name, i, j), hyper_gen(h.name, i, j, True)
                wt = w.weight(h.name, i, j)
                gens += [AGen(x, wt), AGen(xs, -wt)]
                s, r = h.src[i - 1], h.rng[j - 1]
                rels += [ARelation.eq(W(s, x), W(x)), ARelation.eq(W(x, r), W(x)),
                         ARelation.eq(W(r, xs), W(xs)), ARelation.eq(W(xs, s), W(xs))]
        for i in range(1, I + 1):
            for i2 in range(1, I + 1):
                acc = Poly.zero(field)
                for j in range(1, J + 1):
                    acc = acc + W(hyper_gen(h.name, i, j), hyper_gen(h.name, i2, j, True))
                if i == i2:
                    acc = acc - W(h.src[i - 1])
                rels.append(ARelation(acc))
        for j in range(1, J + 1):
            for j2 in range(1, J + 1):
                acc = Poly.zero(field)
                for i in range(1, I + 1):
                    acc = acc + W(hyper_gen(h.name, i, j, True), hyper_gen(h.name, i, j2))
                if j == j2:
                    acc = acc - W(h.rng[j - 1])
                rels.append(ARelation(acc))
    return AlgebraPresentation(G, tuple(gens), tuple(rels), True, field)


def _graph_base(E: Graph, group: GradeGroup, field: Field, ghosts: bool):
    one = group.element([1] + [0] * (group.rank - 1), [0] * len(group.torsion))
    W = lambda *names: Poly.word(*names, field=field)
    gens = [AGen(v, group.zero()) for v in E.vertices]
    rels = _vertex_relations(E.vertices, field)
    for e in E.edges:
        gens.append(AGen(e.name, one))
        rels += [ARelation.eq(W(e.s, e.name), W(e.name)), ARelation.eq(W(e.name, e.r), W(e.name))]
        if ghosts:
            gs = e.name + "*"
            gens.append(AGen(gs, -one))
            rels += [ARelation.eq(W(e.r, gs), W(gs)), ARelation.eq(W(gs, e.s), W(gs))]
    return gens, rels, W


def path_algebra_presentation(E: Graph, group: GradeGroup = Z, field: Field = QQ) -> AlgebraPresentation:
    gens, rels, _ = _graph_base(E, group, field, False)
    return AlgebraPresentation(group, tuple(gens), tuple(rels), True, field)


def lpa_presentation(E: Graph, group: GradeGroup = Z, field: Field = QQ) -> AlgebraPresentation:
    gens, rels, W = _graph_base(E, group, field, True)
    for v in E.regular():
        outs = E.out_edges(v)
        acc = Poly.zero(field)
        for e in outs:
            acc = acc + W(e.name, e.name + "*")
        rels.append(ARelation(acc - W(v)))
        # e* f = delta r(e); pairs with different sources follow from the vertex relations
        for e in outs:
            for f in outs:
                rhs = W(e.r) if e.name == f.name else Poly.zero(field)
                rels.append(ARelation(W(e.name + "*", f.name) - rhs))
    return AlgebraPresentation(group, tuple(gens), tuple(rels), True, field)


def talented_presentation(E: Graph) -> MonoidPresentation:
    rels = []
    for v in E.regular():
        rhs = MWord([((e.r, Z(1)), 1) for e in E.out_edges(v)])
        rels.append(MRelation(MWord.gen(v, Z(0)), rhs))
    unit = MWord([((v, Z(0)), 1) for v in E.vertices])
    return MonoidPresentation(Z, E.vertices, tuple(rels), unit)


def hyper_vgr_presentation(H: Hypergraph, w: WeightMap) -> MonoidPresentation:
    w.check(H)
    rels = []
    for h in H.hedges:
        a, b = w.table[h.name]
        lhs = MWord([((s, g), 1) for s, g in zip(h.src, a)])
        rhs = MWord([((r, g), 1) for r, g in zip(h.rng, b)])
        rels.append(MRelation(lhs, rhs))
    z = w.group.zero()
    unit = MWord([((v, z), 1) for v in H.vertices])
    return MonoidPresentation(w.group, H.vertices, tuple(rels), unit)


# ---------------------------------------------------------------- localization chain


def graph_rename(E: Graph) -> tuple[dict, dict]:
    """Maps from hyper LPA names and Bergman names to LPA names."""
    hyper, berg = {}, {}
    for v in E.vertices:
        hyper[v] = v
        berg[v] = v
    for v in E.regular():
        h = hedge_name(v)
        for j, e in enumerate(E.out_edges(v), 1):
            hyper[hyper_gen(h, 1, j)] = e.name
            hyper[hyper_gen(h, 1, j, True)] = e.name + "*"
            berg["%s.h[1,%d]" % (h, j)] = e.name
            berg["%s.h*[%d,1]" % (h, j)] = e.name + "*"
    return hyper, berg


@dataclass
class ChainReport:
    checks: list  # (name, passed, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def localization_chain_check(E: Graph, field: Field = QQ) -> ChainReport:
    from .bergman import bergman_presentation, hypergraph_to_bergman, localization_presentation

    H, w = graph_to_hypergraph(E)
    data = hypergraph_to_bergman(H, w, field)
    to_lpa_h, to_lpa_b = graph_rename(E)
    P = path_algebra_presentation(E, field=field)
    L = lpa_presentation(E, field=field)
    LH = hyper_lpa_presentation(H, w, field)
    checks = []

    def record(name, p, q, mapping):
        sub = {k: mapping.get(k, k) for k in p.names()}
        try:
            rep = rename_equal(p, q, sub)
            detail = "" if rep.equal else "%d/%d unmatched relations" % (len(rep.only_in_first), len(rep.only_in_second))
            checks.append((name, rep.equal, detail))
        except PresentationError as exc:
            checks.append((name, False, str(exc)))

    record("path algebra = Bergman level 1", bergman_presentation(data, 1), P, to_lpa_b)
    loc = P
    one = Z(1)
    for v in E.regular():
        outs = E.out_edges(v)
        hg = [[Poly.word(e.name, field=field) for e in outs]]
        ev = [[Poly.word(v, field=field)]]
        fv = [[Poly.word(e.r, field=field) if i == j else Poly.zero(field) for j, e in enumerate(outs)]
              for i in range(len(outs))]
        loc = localization_presentation(loc, ev, fv, hg, e_shifts=[Z(0)], f_shifts=[one] * len(outs),
                                        label=hedge_name(v))
    record("localized path algebra = L(E)", loc, L, to_lpa_b)
    record("Bergman level 4 = L(H)", bergman_presentation(data, 4), LH,
           {k: _berg_to_hyper(k) for k in bergman_presentation(data, 4).names()})
    record("L(H) = L(E)", LH, L, to_lpa_h)
    return ChainReport(checks)


def _berg_to_hyper(name: str) -> str:
    """``h.h[i,j]`` -> ``h[i,j]`` and ``h.h*[j,i]`` -> ``h*[i,j]``; base names unchanged."""
    if ".h*[" in name:
        label, rest = name.split(".h*[")
        j, i = rest.rstrip("]").split(",")
        return "%s*[%s,%s]" % (label, i, j)
    if ".h[" in name:
        label, rest = name.split(".h[")
        return "%s[%s" % (label, rest)
    return name


def bergman_to_hyper_names(names) -> dict:
    return {n: _berg_to_hyper(n) for n in names}
