"""Graded noncommutative algebra presentations and a bounded rewriting prover.

A relation is a polynomial read as ``poly = 0``.  Words are tuples of
generator names; the empty tuple is the unit.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .field import QQ, Field, fmt_scalar
from .gamma_monoid import GradeElement, GradeGroup

Word = tuple


class PresentationError(ValueError):
    pass


def word_key(w: Word):
    """Length-lexicographic order on words."""
    return (len(w), w)


class Poly:
    """Finite k-linear combination of words."""

    __slots__ = ("field", "_terms", "_frozen")

    def __init__(self, terms=None, field: Field = QQ):
        self.field = field
        acc: dict = {}
        if terms:
            it = terms.items() if isinstance(terms, dict) else terms
            for w, c in it:
                w = tuple(w)
                acc[w] = acc.get(w, field.zero) + c
        self._terms = {w: c for w, c in acc.items() if c}
        self._frozen = None

    @classmethod
    def word(cls, *names: str, field: Field = QQ, coeff=1) -> "Poly":
        return cls({tuple(names): field(coeff)}, field)

    @classmethod
    def const(cls, c, field: Field = QQ) -> "Poly":
        return cls({(): field(c)}, field)

    @classmethod
    def zero(cls, field: Field = QQ) -> "Poly":
        return cls(None, field)

    def items(self):
        """Terms, largest word first."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def words(self):
        return [w for w, _ in self.items()]

    def coeff(self, w: Word):
        return self._terms.get(tuple(w), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "Poly") -> "Poly":
        d = dict(self._terms)
        for w, c in other._terms.items():
            d[w] = d.get(w, self.field.zero) + c
        return Poly(d, self.field)

    def __neg__(self) -> "Poly":
        return Poly({w: -c for w, c in self._terms.items()}, self.field)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = self.field(other)
            return Poly({w: a * c for w, a in self._terms.items()}, self.field)
        d: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                d[u + v] = d.get(u + v, self.field.zero) + a * b
        return Poly(d, self.field)

    def __rmul__(self, other) -> "Poly":
        return self * other

    def rename(self, mapping: dict) -> "Poly":
        return Poly({tuple(mapping.get(g, g) for g in w): c for w, c in self._terms.items()}, self.field)

    def frozen(self):
        if self._frozen is None:
            self._frozen = tuple((w, c) for w, c in self.items())
        return self._frozen

    def __eq__(self, other):
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self):
        return hash(self.frozen())

    def gens(self) -> set[str]:
        return {g for w in self._terms for g in w}

    def __repr__(self):
        return fmt_poly(self)


def fmt_word(w: Word) -> str:
    return " ".join(w) if w else "1"


def fmt_poly(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for i, (w, c) in enumerate(p.items()):
        neg = p.field.p is None and c < 0
        mag = -c if neg else c
        if mag == 1:
            body = fmt_word(w)
        elif not w:
            body = fmt_scalar(mag)
        else:
            body = "%s %s" % (fmt_scalar(mag), fmt_word(w))
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class ARelation:
    """``poly = 0`` with the largest word's coefficient scaled to 1."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        if poly:
            lead = poly.items()[0][1]
            poly = poly * (1 / lead)
        self.poly = poly

    @classmethod
    def eq(cls, lhs: Poly, rhs: Poly) -> "ARelation":
        return cls(lhs - rhs)

    def is_trivial(self) -> bool:
        return not self.poly

    def rename(self, mapping: dict) -> "ARelation":
        return ARelation(self.poly.rename(mapping))

    def sort_key(self):
        return tuple((word_key(w), fmt_scalar(c)) for w, c in self.poly.items())

    def __eq__(self, other):
        return isinstance(other, ARelation) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return "%s = 0" % fmt_poly(self.poly)


@dataclass(frozen=True)
class AGen:
    name: str
    degree: GradeElement


@dataclass(frozen=True)
class AlgebraPresentation:
    group: GradeGroup
    generators: tuple[AGen, ...]
    relations: tuple[ARelation, ...] = ()
    unital: bool = True
    field: Field = QQ
    graded: bool = True

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        for g in self.generators:
            if not self.group.contains(g.degree):
                raise PresentationError("degree of %s not in %s" % (g.name, self.group))
        known = set(names)
        rels = []
        seen = set()
        for r in self.relations:
            if r.is_trivial():
                continue
            bad = r.poly.gens() - known
            if bad:
                raise PresentationError("relation %r uses undeclared %s" % (r, ", ".join(sorted(bad))))
            if r not in seen:
                seen.add(r)
                rels.append(r)
        rels.sort(key=ARelation.sort_key)
        object.__setattr__(self, "generators", tuple(sorted(self.generators, key=lambda g: g.name)))
        object.__setattr__(self, "relations", tuple(rels))

    def degrees(self) -> dict:
        return {g.name: g.degree for g in self.generators}

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def relation_set(self) -> set:
        return set(self.relations)

    def extend(self, relations: Iterable[ARelation]) -> "AlgebraPresentation":
        return AlgebraPresentation(self.group, self.generators, tuple(self.relations) + tuple(relations),
                                   self.unital, self.field, self.graded)


def degree_of_word(p: AlgebraPresentation, w: Word) -> GradeElement:
    deg = p.degrees()
    total = p.group.zero()
    for g in w:
        if g not in deg:
            raise PresentationError("undeclared generator %r" % g)
        total = total + deg[g]
    return total


def homogeneity_check(p: AlgebraPresentation) -> list[str]:
    out = []
    for r in p.relations:
        degs = {degree_of_word(p, w) for w in r.poly.words()}
        if len(degs) > 1:
            out.append("%r mixes degrees %s" % (r, ", ".join(repr(d) for d in sorted(degs))))
    return out


# ---------------------------------------------------------------- renaming


@dataclass
class RenameReport:
    equal: bool
    only_in_first: list = field(default_factory=list)
    only_in_second: list = field(default_factory=list)

    def __bool__(self):
        return self.equal


def rename_equal(p: AlgebraPresentation, q: AlgebraPresentation, mapping: Optional[dict] = None) -> RenameReport:
    """Compare relation sets after renaming p's generators by ``mapping``."""
    pn, qn = p.names(), q.names()
    if mapping is None:
        mapping = {g: g for g in pn}
    if set(mapping) != set(pn):
        raise PresentationError("map must be defined on exactly the generators of the first presentation")
    if sorted(mapping.values()) != sorted(qn):
        raise PresentationError("map is not a bijection onto the second presentation's generators")
    pd, qd = p.degrees(), q.degrees()
    for a, b in mapping.items():
        if pd[a] != qd[b]:
            raise PresentationError("map sends %s (degree %r) to %s (degree %r)" % (a, pd[a], b, qd[b]))
    if p.field != q.field:
        raise PresentationError("presentations over different fields")
    ren = {r.rename(mapping) for r in p.relations}
    theirs = set(q.relations)
    a = sorted(ren - theirs, key=ARelation.sort_key)
    b = sorted(theirs - ren, key=ARelation.sort_key)
    return RenameReport(not a and not b, a, b)


# ---------------------------------------------------------------- prover


class RuleError(PresentationError):
    pass


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Poly

    def as_relation(self) -> ARelation:
        return ARelation(Poly({self.lhs: self.rhs.field.one}, self.rhs.field) - self.rhs)

    def is_simplifier(self) -> bool:
        return all(word_key(w) < word_key(self.lhs) for w in self.rhs.words())


@dataclass(frozen=True)
class TraceStep:
    coeff: object
    left: Word
    rule: int
    right: Word


@dataclass
class ProofResult:
    status: str  # Proved | Unknown
    trace: list
    moves: int
    nodes: int

    @property
    def proved(self) -> bool:
        return self.status == "Proved"


def _occurrences(w: Word, lhs: Word) -> list[int]:
    """Non-overlapping occurrences, scanned left to right."""
    out, i, n = [], 0, len(lhs)
    if n == 0:
        return out
    while i + n <= len(w):
        if w[i:i + n] == lhs:
            out.append(i)
            i += n
        else:
            i += 1
    return out


def _substitute(f: Poly, ri: int, rule: Rule, positions_of) -> tuple[Poly, list]:
    """Replace occurrences of rule.lhs in every term; returns new poly and trace steps."""
    fld = f.field
    out = Poly.zero(fld)
    steps = []
    n = len(rule.lhs)
    for w, c in f.items():
        pos = positions_of(w)
        if not pos:
            out = out + Poly({w: c}, fld)
            continue
        bounds = [0] + [p + n for p in pos]
        segs = [w[bounds[k]:pos[k]] for k in range(len(pos))] + [w[bounds[-1]:]]
        prefix = Poly({segs[0]: c}, fld)
        for k in range(len(pos)):
            rest = segs[k + 1]
            for m in range(k + 1, len(pos)):
                rest = rest + rule.lhs + segs[m + 1]
            for u, cu in prefix.items():
                steps.append(TraceStep(cu, u, ri, rest))
            prefix = prefix * rule.rhs * Poly({segs[k + 1]: fld.one}, fld)
        out = out + prefix
    return out, steps


def _simplify(f: Poly, simp: list, steps: list) -> Poly:
    # longer left-hand sides win at a given position
    simp = sorted(simp, key=lambda ir: -len(ir[1].lhs))
    while True:
        hit = None
        for w, c in f.items():
            for i in range(len(w)):
                for ri, rule in simp:
                    n = len(rule.lhs)
                    if w[i:i + n] == rule.lhs:
                        hit = (w, c, i, ri, rule)
                        break
                if hit:
                    break
            if hit:
                break
        if not hit:
            return f
        w, c, i, ri, rule = hit
        u, v = w[:i], w[i + len(rule.lhs):]
        steps.append(TraceStep(c, u, ri, v))
        f = f - Poly({w: c}, f.field) + Poly({u: c}, f.field) * rule.rhs * Poly({v: f.field.one}, f.field)


def _as_rules(p: AlgebraPresentation, rules) -> list[Rule]:
    rels = p.relation_set()
    out = []
    for r in rules:
        rule = r if isinstance(r, Rule) else Rule(tuple(r[0]), r[1])
        if rule.as_relation() not in rels:
            raise RuleError("rule %s -> %r is not a relation of the presentation" % (fmt_word(rule.lhs), rule.rhs))
        out.append(rule)
    return out


def bounded_rewrite_prove(p: AlgebraPresentation, identity, rules, depth: int = 4,
                          max_nodes: int = 20000) -> ProofResult:
    """Try to reduce ``identity`` (an ARelation or Poly meaning poly = 0) to zero.

    Rules whose lhs dominates the rhs are applied eagerly, leftmost first;
    the others are search moves substituting every occurrence at once.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    rs = _as_rules(p, rules)
    target = identity.poly if isinstance(identity, ARelation) else identity
    simp = [(i, r) for i, r in enumerate(rs) if r.is_simplifier()]
    moves = [(i, r) for i, r in enumerate(rs) if not r.is_simplifier()]
    steps: list = []
    start = _simplify(target, simp, steps)
    if not start:
        return ProofResult("Proved", steps, 0, 1)
    seen = {start}
    queue = deque([(start, steps, 0)])
    nodes = 1
    while queue:
        f, tr, d = queue.popleft()
        if d >= depth:
            continue
        for ri, rule in moves:
            if not any(_occurrences(w, rule.lhs) for w in f.words()):
                continue
            g, new = _substitute(f, ri, rule, lambda w, lhs=rule.lhs: _occurrences(w, lhs))
            tr2 = tr + new
            g = _simplify(g, simp, tr2)
            if not g:
                return ProofResult("Proved", tr2, d + 1, nodes)
            if g in seen:
                continue
            seen.add(g)
            nodes += 1
            if nodes > max_nodes:
                return ProofResult("Unknown", [], d + 1, nodes)
            queue.append((g, tr2, d + 1))
    return ProofResult("Unknown", [], depth, nodes)


def verify_trace(p: AlgebraPresentation, identity, rules, trace) -> bool:
    """Independent check: identity equals the sum of the traced ideal elements."""
    rs = _as_rules(p, rules)
    target = identity.poly if isinstance(identity, ARelation) else identity
    fld = target.field
    acc = target
    for st in trace:
        rule = rs[st.rule]
        rel = Poly({rule.lhs: fld.one}, fld) - rule.rhs
        acc = acc - Poly({st.left: st.coeff}, fld) * rel * Poly({st.right: fld.one}, fld)
    return acc.is_zero()
