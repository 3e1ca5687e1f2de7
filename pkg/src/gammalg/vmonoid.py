"""Graded V-monoids by presentation: quotients, splittings, realization, homomorphism search."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .field import QQ, Field
from .gamma_monoid import (DEFAULT_BUDGET, DEFAULT_DEPTH, Budget, Decision, GradeElement, MonoidError,
                           MonoidPresentation, MRelation, MWord, combine_truths, graph_decide,
                           invariant_order_unit_check, quotient_presentation, same_presentation,
                           strong_order_unit_check, Z)
from .hyperlpa import Graph, Hypergraph, WeightMap, hyper_vgr_presentation, talented_presentation
from .linalg_ss import SemisimpleRing, diagonal_idempotent


class RealizationError(MonoidError):
    pass


@dataclass(frozen=True)
class ProjectiveSpec:
    """A direct sum of shifted p_t, one entry (t, shift) per summand."""
    summands: tuple

    @classmethod
    def from_word(cls, w: MWord) -> "ProjectiveSpec":
        out = []
        for (g, gr), n in w.items():
            out += [(g, gr)] * n
        return cls(tuple(out))

    def word(self) -> MWord:
        return MWord([((t, g), 1) for t, g in self.summands])

    def __bool__(self):
        return bool(self.summands)


def _check_spec(pres: MonoidPresentation, P: ProjectiveSpec, which: str):
    if not P:
        raise MonoidError("%s is the zero module" % which)
    unknown = {t for t, _ in P.summands} - set(pres.generators)
    if unknown:
        raise MonoidError("%s uses unknown labels %s" % (which, ", ".join(sorted(unknown))))


def vgr_quotient(pres: MonoidPresentation, P: ProjectiveSpec, Q: ProjectiveSpec) -> MonoidPresentation:
    _check_spec(pres, P, "P")
    _check_spec(pres, Q, "Q")
    return quotient_presentation(pres, [MRelation(P.word(), Q.word())])


def fresh_names(pres: MonoidPresentation, count: int = 2, stem: str = "P") -> list[str]:
    taken = set(pres.generators)
    out, k = [], 1
    while len(out) < count:
        name = "%s%d" % (stem, k)
        if name not in taken:
            out.append(name)
        k += 1
    return out


def vgr_adjoin_split(pres: MonoidPresentation, P: ProjectiveSpec) -> MonoidPresentation:
    _check_spec(pres, P, "P")
    p1, p2 = fresh_names(pres)
    z = pres.group.zero()
    rel = MRelation(P.word(), MWord([((p1, z), 1), ((p2, z), 1)]))
    return MonoidPresentation(pres.group, pres.generators + (p1, p2), pres.relations + (rel,), pres.order_unit)


# ---------------------------------------------------------------- realization


@dataclass
class RealizationReport:
    hypergraph: Hypergraph
    weights: WeightMap
    verified: bool
    presentation: MonoidPresentation
    notes: list = field(default_factory=list)


def realize(M: MonoidPresentation, field: Field = QQ) -> RealizationReport:
    """Weighted hypergraph whose graded V-monoid has presentation M."""
    from .bergman import BergmanData, BergmanPair, bergman_to_hypergraph

    if not M.generators:
        raise RealizationError("finitely many generators required: the generator set is empty")
    unit = M.unit_of_generators()
    if M.order_unit is None or M.order_unit != unit:
        raise RealizationError("normal form violated: the order unit must be the sum of all generators "
                               "in degree 0 (%r)" % (unit,))
    for k, r in enumerate(M.relations, 1):
        if not r.lhs or not r.rhs:
            raise RealizationError("relation %d has a zero side; every relation side must be nonzero" % k)
    ring = SemisimpleRing(M.generators, field)
    pairs = []
    width = len(str(len(M.relations)))
    for k, r in enumerate(M.relations, 1):
        P, Q = ProjectiveSpec.from_word(r.lhs), ProjectiveSpec.from_word(r.rhs)
        e = diagonal_idempotent(ring, list(P.summands))
        f = diagonal_idempotent(ring, list(Q.summands))
        pairs.append(BergmanPair("r%0*d" % (width, k), e, f))
    data = BergmanData(ring, M.group, tuple(pairs))
    H, w, _ = bergman_to_hypergraph(data)
    out = hyper_vgr_presentation(H, w)
    ok = same_presentation(out, M)
    notes = [] if ok else ["hyper V-monoid presentation differs from the input"]
    return RealizationReport(H, w, ok, out, notes)


# ---------------------------------------------------------------- grading structure


def grading_structure_check(H: Hypergraph, w: WeightMap, budget: Budget = DEFAULT_BUDGET,
                            depth: int = DEFAULT_DEPTH) -> dict:
    pres = hyper_vgr_presentation(H, w)
    i = pres.order_unit
    probes = []
    for v in pres.generators:
        for g in pres.group.generators():
            probes += [MWord.gen(v, g), MWord.gen(v, -g)]
    if probes:
        per = strong_order_unit_check(pres, i, probes, budget)
        strong = combine_truths(per)
    else:
        per = []
        strong = Decision("Equal", engine="aggregate", note="trivial group")
    crossed = invariant_order_unit_check(pres, i, budget, depth)
    return {"strongly_graded": strong, "crossed_product": crossed, "probes": list(zip(probes, per))}


# ---------------------------------------------------------------- homomorphism search


@dataclass(frozen=True)
class HomBounds:
    max_coeff: int = 2
    shift_radius: int = 1
    max_support: int = 2

    def __post_init__(self):
        if self.max_coeff < 1 or self.shift_radius < 0 or self.max_support < 1:
            raise ValueError("bounds must be positive")


@dataclass
class HomCertificate:
    assignment: dict
    transcript: list  # (label, image lhs, image rhs, Decision)
    pointed: bool
    nonvanishing: bool


@dataclass
class HomSearchResult:
    certificate: Optional[HomCertificate]
    assignments_checked: int
    unknown: int
    candidates_per_vertex: int

    @property
    def found(self) -> bool:
        return self.certificate is not None


def candidate_words(F: Graph, bounds: HomBounds) -> list[MWord]:
    """Words over F^0 in enumeration order: support size, coefficients, |shifts|."""
    r = bounds.shift_radius
    shifts = sorted(range(-r, r + 1), key=lambda s: (abs(s), s))
    keys = [(v, s) for s in shifts for v in F.vertices]
    out = [((0, (), ()), MWord())]
    for k in range(1, bounds.max_support + 1):
        for combo in itertools.combinations(keys, k):
            for coeffs in itertools.product(range(1, bounds.max_coeff + 1), repeat=k):
                order = (k, coeffs, tuple(abs(s) for _, s in combo), tuple((v, s) for v, s in combo))
                out.append((order, MWord([((v, Z(s)), c) for (v, s), c in zip(combo, coeffs)])))
    out.sort(key=lambda t: t[0])
    return [wd for _, wd in out]


def _image(assign: dict, w: MWord) -> MWord:
    out = MWord()
    for (v, gr), n in w.items():
        out = out + assign[v].shift(gr).scale(n)
    return out


def hom_search(E: Graph, F: Graph, bounds: HomBounds = HomBounds(), require_pointed: bool = True,
               depth: int = DEFAULT_DEPTH) -> HomSearchResult:
    TE, TF = talented_presentation(E), talented_presentation(F)
    cands = candidate_words(F, bounds)
    verts = list(TE.generators)
    checked = unknown = 0
    for choice in itertools.product(cands, repeat=len(verts)):
        checked += 1
        assign = dict(zip(verts, choice))
        transcript = []
        ok = True
        for r in TE.relations:
            a, b = _image(assign, r.lhs), _image(assign, r.rhs)
            d = graph_decide(TF, a, b, depth)
            transcript.append(("%r = %r" % (r.lhs, r.rhs), a, b, d))
            if not d.is_equal:
                unknown += d.is_unknown
                ok = False
                break
        if ok and require_pointed:
            a = _image(assign, TE.order_unit)
            d = graph_decide(TF, a, TF.order_unit, depth)
            transcript.append(("unit", a, TF.order_unit, d))
            if not d.is_equal:
                unknown += d.is_unknown
                ok = False
        if ok:
            cert = HomCertificate(assign, transcript, require_pointed, all(bool(w) for w in choice))
            return HomSearchResult(cert, checked, unknown, len(cands))
    return HomSearchResult(None, checked, unknown, len(cands))


def replay(cert: HomCertificate, F: Graph, depth: int = DEFAULT_DEPTH) -> bool:
    TF = talented_presentation(F)
    return all(graph_decide(TF, a, b, depth).is_equal for _, a, b, _ in cert.transcript)
