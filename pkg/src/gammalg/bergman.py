"""Bergman algebra presentations and the translation to and from weighted hypergraphs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algpres import AGen, AlgebraPresentation, ARelation, Poly, PresentationError, Rule, _simplify
from .field import Field
from .gamma_monoid import GradeGroup
from .hyperlpa import HEdge, Hypergraph, WeightMap
from .linalg_ss import (EquivalenceWitness, IdempotentError, RingElem, SemisimpleRing, ShiftedIdempotent,
                        diagonal_idempotent, diagonalize, idempotent_violations)


@dataclass(frozen=True)
class BergmanPair:
    label: str
    e: ShiftedIdempotent
    f: ShiftedIdempotent


@dataclass(frozen=True)
class BergmanData:
    ring: SemisimpleRing
    group: GradeGroup
    pairs: tuple[BergmanPair, ...] = ()

    def __post_init__(self):
        labels = [p.label for p in self.pairs]
        if len(set(labels)) != len(labels):
            raise PresentationError("pair labels must be unique")
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for p in self.pairs:
            for name, m in (("e", p.e), ("f", p.f)):
                if m.ring != self.ring:
                    raise PresentationError("pair %s: %s over a different ring" % (p.label, name))
                if any(not self.group.contains(s) for s in m.shifts):
                    raise PresentationError("pair %s: shifts of %s outside %s" % (p.label, name, self.group))
                bad = idempotent_violations(self.ring, m.entries, m.shifts)
                if bad:
                    raise IdempotentError(["pair %s, %s: %s" % (p.label, name, v) for v in bad])


# ---------------------------------------------------------------- helpers


def ring_poly(ring: SemisimpleRing, x: RingElem) -> Poly:
    """Sum of c_t eps_t, with eps_t named by its component label."""
    return Poly({(t,): c for t, c in ring.terms(x)}, ring.field)


def base_generators(ring: SemisimpleRing, group: GradeGroup) -> list[AGen]:
    return [AGen(t, group.zero()) for t in ring.components]


def base_relations(ring: SemisimpleRing) -> list[ARelation]:
    fld = ring.field
    out = []
    for s in ring.components:
        out.append(ARelation.eq(Poly.word(s, s, field=fld), Poly.word(s, field=fld)))
        for t in ring.components:
            if s != t:
                out.append(ARelation(Poly.word(s, t, field=fld)))
    total = Poly.zero(fld)
    for t in ring.components:
        total = total + Poly.word(t, field=fld)
    out.append(ARelation.eq(total, Poly.const(1, fld)))
    return out


def base_presentation(ring: SemisimpleRing, group: GradeGroup) -> AlgebraPresentation:
    return AlgebraPresentation(group, tuple(base_generators(ring, group)), tuple(base_relations(ring)),
                               True, ring.field)


def base_rules(p: AlgebraPresentation) -> list[Rule]:
    """Every relation oriented largest word first."""
    out = []
    for r in p.relations:
        items = r.poly.items()
        lead = items[0][0]
        out.append(Rule(lead, -(r.poly - Poly({lead: p.field.one}, p.field))))
    return out


def _matmul(a, b, fld):
    """Product of matrices whose entries are Poly."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Poly.zero(fld)) for j in range(cols)]
            for i in range(len(a))]


def _entrywise(lhs, rhs) -> list[ARelation]:
    return [ARelation.eq(lhs[i][j], rhs[i][j]) for i in range(len(lhs)) for j in range(len(lhs[i]))]


def _sym(fld, name):
    return Poly.word(name, field=fld)


def _ring_matrix(ring, m: ShiftedIdempotent):
    return [[ring_poly(ring, x) for x in row] for row in m.entries]


def h_name(label: str, i: int, j: int) -> str:
    return "%s.h[%d,%d]" % (label, i, j)


def hstar_name(label: str, j: int, i: int) -> str:
    return "%s.h*[%d,%d]" % (label, j, i)


# ---------------------------------------------------------------- emitters


def bergman_presentation(data: BergmanData, level: int = 4) -> AlgebraPresentation:
    if level not in (1, 2, 3, 4):
        raise ValueError("level must be 1, 2, 3 or 4")
    ring, fld = data.ring, data.ring.field
    gens = base_generators(ring, data.group)
    rels = base_relations(ring)
    for pair in data.pairs:
        m, n = pair.e.n, pair.f.n
        beta, gamma = pair.e.shifts, pair.f.shifts
        E, F = _ring_matrix(ring, pair.e), _ring_matrix(ring, pair.f)
        H = [[_sym(fld, h_name(pair.label, i + 1, j + 1)) for j in range(n)] for i in range(m)]
        for i in range(m):
            for j in range(n):
                gens.append(AGen(h_name(pair.label, i + 1, j + 1), gamma[j] - beta[i]))
        rels += _entrywise(_matmul(E, H, fld), H)
        rels += _entrywise(_matmul(H, F, fld), H)
        if level >= 2:
            S = [[_sym(fld, hstar_name(pair.label, j + 1, i + 1)) for i in range(m)] for j in range(n)]
            for j in range(n):
                for i in range(m):
                    gens.append(AGen(hstar_name(pair.label, j + 1, i + 1), beta[i] - gamma[j]))
            rels += _entrywise(_matmul(F, S, fld), S)
            rels += _entrywise(_matmul(S, E, fld), S)
            if level >= 3:
                rels += _entrywise(_matmul(H, S, fld), E)
            if level >= 4:
                rels += _entrywise(_matmul(S, H, fld), F)
    return AlgebraPresentation(data.group, tuple(gens), tuple(rels), True, fld)


def bergman_idem_presentation(ring: SemisimpleRing, e: ShiftedIdempotent, group: GradeGroup,
                              label: Optional[str] = None) -> AlgebraPresentation:
    bad = idempotent_violations(ring, e.entries, e.shifts)
    if bad:
        raise IdempotentError(bad)
    fld = ring.field
    prefix = "" if label is None else label + "."
    m = e.n
    names = [["%sh[%d,%d]" % (prefix, k + 1, l + 1) for l in range(m)] for k in range(m)]
    gens = base_generators(ring, group)
    gens += [AGen(names[k][l], e.shifts[l] - e.shifts[k]) for k in range(m) for l in range(m)]
    E = _ring_matrix(ring, e)
    H = [[_sym(fld, names[k][l]) for l in range(m)] for k in range(m)]
    rels = base_relations(ring)
    rels += _entrywise(_matmul(E, H, fld), H)
    rels += _entrywise(_matmul(H, E, fld), H)
    rels += _entrywise(_matmul(H, H, fld), H)
    return AlgebraPresentation(group, tuple(gens), tuple(rels), True, fld)


MatrixLike = Union[ShiftedIdempotent, tuple]


def _poly_matrix(base_ring, m, fld):
    rows = m.entries if isinstance(m, ShiftedIdempotent) else m
    out = []
    for row in rows:
        new = []
        for x in row:
            if isinstance(x, RingElem):
                if base_ring is None:
                    raise PresentationError("ring elements need a semisimple base")
                new.append(ring_poly(base_ring, x))
            elif isinstance(x, Poly):
                new.append(x)
            elif isinstance(x, str):
                new.append(Poly.word(x, field=fld))
            else:
                new.append(Poly.const(x, fld))
        out.append(new)
    return out


def localization_presentation(base: Union[SemisimpleRing, AlgebraPresentation], e, f, h_g,
                              e_shifts: Optional[Sequence] = None, f_shifts: Optional[Sequence] = None,
                              group: Optional[GradeGroup] = None, label: str = "g") -> AlgebraPresentation:
    """Adjoin h* making h_g invertible between the projectives given by e and f.

    ``e``/``f`` are ShiftedIdempotents, or matrices of Poly over ``base`` with
    explicit shift vectors.
    """
    if isinstance(base, SemisimpleRing):
        if group is None:
            group = _group_of(e, f)
        ring = base
        pres = base_presentation(base, group)
    else:
        ring = None
        pres = base
        group = pres.group
    fld = pres.field
    beta = tuple(e.shifts if isinstance(e, ShiftedIdempotent) else e_shifts)
    gamma = tuple(f.shifts if isinstance(f, ShiftedIdempotent) else f_shifts)
    E, F, Hg = _poly_matrix(ring, e, fld), _poly_matrix(ring, f, fld), _poly_matrix(ring, h_g, fld)
    m, n = len(beta), len(gamma)
    if len(Hg) != m or any(len(r) != n for r in Hg):
        raise PresentationError("h_g must be %dx%d" % (m, n))
    ehf = _matmul(_matmul(E, Hg, fld), F, fld)
    for i in range(m):
        for j in range(n):
            if not _vanishes(pres, ehf[i][j] - Hg[i][j]):
                raise PresentationError("h_g fails e*h_g*f = h_g at entry (%d,%d)" % (i + 1, j + 1))
    S = [[_sym(fld, hstar_name(label, j + 1, i + 1)) for i in range(m)] for j in range(n)]
    gens = list(pres.generators)
    gens += [AGen(hstar_name(label, j + 1, i + 1), beta[i] - gamma[j]) for j in range(n) for i in range(m)]
    rels = list(pres.relations)
    rels += _entrywise(_matmul(F, S, fld), S)
    rels += _entrywise(_matmul(S, E, fld), S)
    rels += _entrywise(_matmul(Hg, S, fld), E)
    rels += _entrywise(_matmul(S, Hg, fld), F)
    return AlgebraPresentation(group, tuple(gens), tuple(rels), True, fld)


def _idempotent_system(p: AlgebraPresentation) -> list[str]:
    """Generators forming a complete family of orthogonal idempotents, if the relations say so."""
    rels, fld = p.relation_set(), p.field
    W = lambda *names: Poly.word(*names, field=fld)
    cand = [g for g in p.names() if ARelation(W(g, g) - W(g)) in rels]
    total = sum((W(g) for g in cand), Poly.zero(fld))
    if not cand or ARelation(total - Poly.const(1, fld)) not in rels:
        return []
    if any(s != t and ARelation(W(s, t)) not in rels for s in cand for t in cand):
        return []
    return cand


def _sandwich(f: Poly, idems: list) -> dict:
    """Rewrite f as a combination of words eps c_1 eps c_2 ... eps, using eps_s eps_t = delta eps_s and 1 = sum eps."""
    iset = set(idems)
    out: dict = {}
    for w, c in f.items():
        segs, cores = [[]], []
        for x in w:
            if x in iset:
                segs[-1].append(x)
            else:
                cores.append(x)
                segs.append([])
        choices = []
        for seg in segs:
            if not seg:
                choices.append(idems)
            elif all(x == seg[0] for x in seg):
                choices.append([seg[0]])
            else:
                break
        else:
            for pick in itertools.product(*choices):
                key = (pick[0],) + tuple(x for pair in zip(cores, pick[1:]) for x in pair)
                out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _in_span(vectors, target) -> bool:
    basis = []  # (pivot word, vector) with the pivot eliminated from later vectors
    def reduce(v):
        v = dict(v)
        for piv, b in basis:
            c = v.get(piv)
            if c:
                for k, x in b.items():
                    v[k] = v.get(k, 0) - c * x
                v = {k: x for k, x in v.items() if x}
        return v
    for vec in vectors:
        v = reduce(vec)
        if v:
            piv = min(v)
            inv = 1 / v[piv]
            basis.append((piv, {k: x * inv for k, x in v.items()}))
    return not reduce(target)


def _vanishes(p: AlgebraPresentation, f: Poly) -> bool:
    """Is f zero modulo the relations of p?

    With a complete idempotent family this is exact for relations linear in the remaining
    letters: f must lie in the span of eps_s r eps_t.  Otherwise eager simplification is tried.
    """
    idems = _idempotent_system(p)
    if not idems:
        rules = base_rules(p)
        return not _simplify(f, [(i, r) for i, r in enumerate(rules) if r.is_simplifier()], [])
    target = _sandwich(f, idems)
    if not target:
        return True
    letters = {x for w in target for x in w} - set(idems)
    vecs = []
    for r in p.relations:
        if not r.poly.gens() - set(idems) or not r.poly.gens() - set(idems) <= letters:
            continue
        for s in idems:
            for t in idems:
                v = _sandwich(Poly.word(s, field=p.field) * r.poly * Poly.word(t, field=p.field), idems)
                if v:
                    vecs.append(v)
    return _in_span(vecs, target)


def _group_of(e, f) -> GradeGroup:
    s = (list(e.shifts) + list(f.shifts))[0]
    return GradeGroup(len(s.free), s.mods)


# ---------------------------------------------------------------- hypergraph translation


def bergman_to_hypergraph(data: BergmanData) -> tuple[Hypergraph, WeightMap, dict]:
    """One hyperedge per pair, read off the diagonalized idempotents."""
    hedges, table, witnesses = [], {}, {}
    for pair in data.pairs:
        de, we = diagonalize(pair.e)
        df, wf = diagonalize(pair.f)
        if not de.slots or not df.slots:
            raise PresentationError("pair %s has a zero idempotent; the hyperedge would not be regular" % pair.label)
        base = de.slots[0][1]
        a = tuple(s - base for _, s in de.slots)
        b = tuple(s - base for _, s in df.slots)
        hedges.append(HEdge(pair.label, tuple(t for t, _ in de.slots), tuple(t for t, _ in df.slots)))
        table[pair.label] = (a, b)
        witnesses[pair.label] = {"e": (de, we), "f": (df, wf)}
    H = Hypergraph(tuple(data.ring.components), tuple(hedges))
    return H, WeightMap(data.group, table), witnesses


def hypergraph_to_bergman(H: Hypergraph, w: WeightMap, field: Optional[Field] = None) -> BergmanData:
    from .field import QQ
    w.check(H)
    ring = SemisimpleRing(tuple(H.vertices), field or QQ)
    pairs = []
    for h in H.hedges:
        a, b = w.table[h.name]
        e = diagonal_idempotent(ring, list(zip(h.src, a)))
        f = diagonal_idempotent(ring, list(zip(h.rng, b)))
        pairs.append(BergmanPair(h.name, e, f))
    return BergmanData(ring, w.group, tuple(pairs))


def diagonal_form(data: BergmanData) -> BergmanData:
    """Replace every idempotent by its diagonal form."""
    pairs = []
    for p in data.pairs:
        de, _ = diagonalize(p.e)
        df, _ = diagonalize(p.f)
        pairs.append(BergmanPair(p.label, de.as_idempotent(data.ring), df.as_idempotent(data.ring)))
    return BergmanData(data.ring, data.group, tuple(pairs))


def slot_signature(data: BergmanData) -> dict:
    out = {}
    for p in data.pairs:
        out[p.label] = (diagonalize(p.e)[0].slots, diagonalize(p.f)[0].slots)
    return out


def witness_is_valid(e: ShiftedIdempotent, w: EquivalenceWitness) -> bool:
    from .linalg_ss import check_witness
    return check_witness(e, diagonalize(e)[0], w)
