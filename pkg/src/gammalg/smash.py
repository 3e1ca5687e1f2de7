"""Finite pieces of smash products of Bergman algebras over k^T.

For a window ``A`` of grades, T_A is the piece cut out of the smash product
and B_A the Bergman algebra over R#Gamma_A; ``smash_comparison_check`` proves
the absorption relations missing from B_A and compares the two.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .algpres import (AGen, AlgebraPresentation, ARelation, Poly, Rule, bounded_rewrite_prove, rename_equal,
                      verify_trace)
from .bergman import BergmanData
from .gamma_monoid import GradeElement, GradeGroup
from .linalg_ss import SemisimpleRing, ShiftedIdempotent, RingElem, diagonalize, validate_idempotent

TRIVIAL = GradeGroup.trivial()


@dataclass(frozen=True)
class IdemData:
    """Idempotent endomorphisms to be made universal, one per label."""
    ring: SemisimpleRing
    group: GradeGroup
    idems: tuple  # ((label, ShiftedIdempotent), ...)


SmashInput = Union[BergmanData, IdemData]


def grade_tag(g: GradeElement) -> str:
    if len(g.free) == 1 and not g.res:
        return str(g.free[0])
    return repr(g)


def window(data: SmashInput, A: Iterable[GradeElement]) -> list[GradeElement]:
    """Gamma_A: gamma - (column shifts) and gamma - (row shifts), over all pairs."""
    out = set()
    for g in A:
        if isinstance(data, BergmanData):
            for p in data.pairs:
                out.update(g - s for s in p.f.shifts)
                out.update(g - s for s in p.e.shifts)
        else:
            for _, d in data.idems:
                out.update(g - s for s in d.shifts)
    return sorted(out)


class _Names:
    def __init__(self, ring: SemisimpleRing):
        self.ring = ring

    def p(self, t: str, b: GradeElement) -> str:
        if self.ring.size == 1:
            return "p[%s]" % grade_tag(b)
        return "%s.p[%s]" % (t, grade_tag(b))


def _sum(polys, fld):
    acc = Poly.zero(fld)
    for p in polys:
        acc = acc + p
    return acc


def _base(ring: SemisimpleRing, gam: list):
    fld = ring.field
    nm = _Names(ring)
    gens = [AGen(nm.p(t, b), TRIVIAL.zero()) for b in gam for t in ring.components]
    rels = []
    keys = [(t, b) for b in gam for t in ring.components]
    for x in keys:
        for y in keys:
            w = Poly.word(nm.p(*x), nm.p(*y), field=fld)
            rels.append(ARelation(w - Poly.word(nm.p(*x), field=fld)) if x == y else ARelation(w))
    return gens, rels, nm


def _tagged(ring, nm, x: RingElem, b: GradeElement) -> Poly:
    """x p_b as a combination of the generators eps_t p_b."""
    return Poly({(nm.p(t, b),): c for t, c in ring.terms(x)}, ring.field)


def _one_p(ring, nm, b):
    return _tagged(ring, nm, ring.one, b)


def smash_ring_presentation(ring: SemisimpleRing, A: Iterable[GradeElement],
                            data: Optional[SmashInput] = None) -> AlgebraPresentation:
    """R#Gamma_A for R = k^T in degree 0; Gamma_A = A when no Bergman data is given."""
    A = list(A)
    gam = window(data, A) if data is not None else sorted(set(A))
    gens, rels, _ = _base(ring, gam)
    return AlgebraPresentation(TRIVIAL, tuple(gens), tuple(rels), False, ring.field, graded=False)


def smash_semisimple_ring(ring: SemisimpleRing, gam: Iterable[GradeElement]) -> SemisimpleRing:
    """R#Gamma_A is again a product of copies of k, one per generator eps_t p_b."""
    nm = _Names(ring)
    return SemisimpleRing(tuple(nm.p(t, b) for b in sorted(set(gam)) for t in ring.components), ring.field)


def smash_idempotent(d: ShiftedIdempotent, gamma: GradeElement, gam: Iterable[GradeElement]) -> ShiftedIdempotent:
    """d^(gamma) = (d_ij p_{gamma - beta_j}) as an idempotent over k^(T x Gamma_A)."""
    ring = d.ring
    big = smash_semisimple_ring(ring, gam)
    nm = _Names(ring)
    zero = ring.field.zero
    rows = []
    for i in range(d.n):
        row = []
        for j in range(d.n):
            vals = [zero] * big.size
            b = gamma - d.shifts[j]
            for t, c in ring.terms(d.entries[i][j]):
                vals[big.index(nm.p(t, b))] = c
            row.append(RingElem(vals))
        rows.append(row)
    return validate_idempotent(big, rows, [TRIVIAL.zero()] * d.n)


def _matmul(a, b, fld):
    return [[_sum((a[i][k] * b[k][j] for k in range(len(b))), fld) for j in range(len(b[0]))]
            for i in range(len(a))]


def _eqs(lhs, rhs):
    return [ARelation.eq(lhs[i][j], rhs[i][j]) for i in range(len(lhs)) for j in range(len(lhs[0]))]


def _sym(name, fld):
    return Poly.word(name, field=fld)


def _iso_names(label, gamma, letter):
    g = grade_tag(gamma)
    return (lambda j, m: "%s.%s(%s)[%d,%d]" % (label, letter, g, j, m),
            lambda m, j: "%s.%s'(%s)[%d,%d]" % (label, letter, g, m, j))


def _idem_name(label, gamma, letter):
    g = grade_tag(gamma)
    return lambda i, j: "%s.%s(%s)[%d,%d]" % (label, letter, g, i, j)


@dataclass
class _Families:
    gens: list
    base: list
    matrix: list  # relations present in both T_A and B_A (up to renaming)
    absorb: list  # absorption relations (T_A only)
    obligations: list  # (identity Poly in B_A names, rule list) per absorption relation


def _families(data: SmashInput, A: list, letter: str) -> _Families:
    ring, fld = data.ring, data.ring.field
    gam = window(data, A)
    gens, base, nm = _base(ring, gam)
    matrix, absorb, obligations = [], [], []
    if isinstance(data, BergmanData):
        for pair in data.pairs:
            J, M = pair.e.n, pair.f.n
            beta, gm = pair.e.shifts, pair.f.shifts
            for g in A:
                hn, hpn = _iso_names(pair.label, g, letter)
                d = [[_tagged(ring, nm, pair.e.entries[i][j], g - beta[j]) for j in range(J)] for i in range(J)]
                e = [[_tagged(ring, nm, pair.f.entries[k][m], g - gm[m]) for m in range(M)] for k in range(M)]
                H = [[_sym(hn(j + 1, m + 1), fld) for m in range(M)] for j in range(J)]
                Hp = [[_sym(hpn(m + 1, j + 1), fld) for j in range(J)] for m in range(M)]
                gens += [AGen(hn(j + 1, m + 1), TRIVIAL.zero()) for j in range(J) for m in range(M)]
                gens += [AGen(hpn(m + 1, j + 1), TRIVIAL.zero()) for m in range(M) for j in range(J)]
                expand = []
                for j in range(J):
                    for m in range(M):
                        expand.append(Rule((hn(j + 1, m + 1),), _sum((d[j][i] * H[i][m] for i in range(J)), fld)))
                        expand.append(Rule((hn(j + 1, m + 1),), _sum((H[j][k] * e[k][m] for k in range(M)), fld)))
                        expand.append(Rule((hpn(m + 1, j + 1),), _sum((e[m][k] * Hp[k][j] for k in range(M)), fld)))
                        expand.append(Rule((hpn(m + 1, j + 1),), _sum((Hp[m][i] * d[i][j] for i in range(J)), fld)))
                for j in range(J):
                    for m in range(M):
                        h, hp = H[j][m], Hp[m][j]
                        for ident in (h * _one_p(ring, nm, g - gm[m]) - h, _one_p(ring, nm, g - beta[j]) * h - h,
                                      hp * _one_p(ring, nm, g - beta[j]) - hp, _one_p(ring, nm, g - gm[m]) * hp - hp):
                            absorb.append(ARelation(ident))
                            obligations.append((ident, expand))
                matrix += _eqs(_matmul(d, H, fld), H) + _eqs(_matmul(H, e, fld), H)
                matrix += _eqs(_matmul(e, Hp, fld), Hp) + _eqs(_matmul(Hp, d, fld), Hp)
                matrix += _eqs(_matmul(H, Hp, fld), d) + _eqs(_matmul(Hp, H, fld), e)
    else:
        for label, dm in data.idems:
            J, beta = dm.n, dm.shifts
            for g in A:
                en = _idem_name(label, g, letter)
                d = [[_tagged(ring, nm, dm.entries[i][j], g - beta[j]) for j in range(J)] for i in range(J)]
                X = [[_sym(en(i + 1, j + 1), fld) for j in range(J)] for i in range(J)]
                gens += [AGen(en(i + 1, j + 1), TRIVIAL.zero()) for i in range(J) for j in range(J)]
                expand = []
                for i in range(J):
                    for j in range(J):
                        expand.append(Rule((en(i + 1, j + 1),), _sum((X[i][k] * d[k][j] for k in range(J)), fld)))
                        expand.append(Rule((en(i + 1, j + 1),), _sum((d[i][k] * X[k][j] for k in range(J)), fld)))
                for i in range(J):
                    for j in range(J):
                        x = X[i][j]
                        for ident in (x * _one_p(ring, nm, g - beta[j]) - x, _one_p(ring, nm, g - beta[i]) * x - x):
                            absorb.append(ARelation(ident))
                            obligations.append((ident, expand))
                matrix += _eqs(_matmul(d, X, fld), X) + _eqs(_matmul(X, d, fld), X) + _eqs(_matmul(X, X, fld), X)
    return _Families(gens, base, matrix, absorb, obligations)


def _letters(data, t_side: bool):
    if isinstance(data, BergmanData):
        return "h" if t_side else "g"
    return "e" if t_side else "f"


def smash_TA_presentation(data: SmashInput, A: Iterable[GradeElement]) -> AlgebraPresentation:
    A = sorted(set(A))
    fam = _families(data, A, _letters(data, True))
    return AlgebraPresentation(TRIVIAL, tuple(fam.gens), tuple(fam.base + fam.matrix + fam.absorb), False,
                               data.ring.field, graded=False)


def smash_BA_presentation(data: SmashInput, A: Iterable[GradeElement]) -> AlgebraPresentation:
    A = sorted(set(A))
    fam = _families(data, A, _letters(data, False))
    return AlgebraPresentation(TRIVIAL, tuple(fam.gens), tuple(fam.base + fam.matrix), False,
                               data.ring.field, graded=False)


def expected_generator_count(data: SmashInput, A: Iterable[GradeElement]) -> int:
    A = sorted(set(A))
    n = data.ring.size * len(window(data, A))
    if isinstance(data, BergmanData):
        return n + sum(2 * p.e.n * p.f.n * len(A) for p in data.pairs)
    return n + sum(d.n * d.n * len(A) for _, d in data.idems)


@dataclass
class SmashReport:
    T: AlgebraPresentation
    B: AlgebraPresentation
    obligations: list = field(default_factory=list)  # (relation, status, trace ok)
    rename_ok: bool = False

    @property
    def passed(self) -> bool:
        return self.rename_ok and all(st == "Proved" and ok for _, st, ok in self.obligations)


def _rename_map(B: AlgebraPresentation, data: SmashInput) -> dict:
    b, t = _letters(data, False), _letters(data, True)
    out = {}
    for n in B.names():
        out[n] = n.replace(".%s(" % b, ".%s(" % t).replace(".%s'(" % b, ".%s'(" % t)
    return out


def smash_comparison_check(data: SmashInput, A: Iterable[GradeElement], depth: int = 2) -> SmashReport:
    A = sorted(set(A))
    T = smash_TA_presentation(data, A)
    B = smash_BA_presentation(data, A)
    fam = _families(data, A, _letters(data, False))
    base_rules = [Rule(r.poly.items()[0][0], -(r.poly - Poly({r.poly.items()[0][0]: B.field.one}, B.field)))
                  for r in fam.base]
    proved, report = [], []
    for ident, expand in fam.obligations:
        rules = base_rules + expand
        res = bounded_rewrite_prove(B, ident, rules, depth)
        ok = res.proved and verify_trace(B, ident, rules, res.trace)
        report.append((ARelation(ident), res.status, ok))
        if res.proved:
            proved.append(ARelation(ident))
    rename_ok = rename_equal(B.extend(proved), T, _rename_map(B, data)).equal if B.generators or T.generators \
        else True
    return SmashReport(T, B, report, rename_ok)


def nesting_holds(data: SmashInput, A: Iterable[GradeElement], A2: Iterable[GradeElement]) -> bool:
    """Every relation of T_A appears verbatim in T_A2 (A a subset of A2)."""
    A, A2 = set(A), set(A2)
    if not A <= A2:
        raise ValueError("first window must be contained in the second")
    T1, T2 = smash_TA_presentation(data, A), smash_TA_presentation(data, A2)
    return set(T1.names()) <= set(T2.names()) and T1.relation_set() <= T2.relation_set()


def slot_shifts(d: ShiftedIdempotent, gamma: GradeElement, gam: Iterable[GradeElement]) -> list[str]:
    """Components of the diagonal form of d^(gamma)."""
    return [t for t, _ in diagonalize(smash_idempotent(d, gamma, gam))[0].slots]


def unit_idempotent(T: AlgebraPresentation, depth: int = 2) -> bool:
    """The sum of the base generators p is idempotent modulo the relations of T."""
    fld = T.field
    u = _sum((Poly.word(n, field=fld) for n in T.names() if ".p[" in n or n.startswith("p[")), fld)
    rules = []
    for r in T.relations:
        lead = r.poly.items()[0][0]
        if all(".p[" in x or x.startswith("p[") for x in lead) and len(lead) == 2:
            rules.append(Rule(lead, -(r.poly - Poly({lead: fld.one}, fld))))
    return bounded_rewrite_prove(T, u * u - u, rules, depth).proved
