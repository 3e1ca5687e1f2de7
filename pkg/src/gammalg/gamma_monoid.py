"""Grade groups, free Gamma-monoid words, monoid presentations and decision engines.

A word is a finite multiset of keys ``(generator, grade)``.  Relations are
shift-closed: ``lhs = rhs`` stands for ``lhs(d) = rhs(d)`` for every grade ``d``.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class MonoidError(ValueError):
    pass


class NotGraphShaped(MonoidError):
    pass


# ---------------------------------------------------------------- grade groups


@dataclass(frozen=True, order=True)
class GradeElement:
    free: tuple[int, ...]
    res: tuple[int, ...] = ()
    mods: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.res) != len(self.mods):
            raise MonoidError("residue vector does not match the torsion of the group")
        for r, m in zip(self.res, self.mods):
            if not 0 <= r < m:
                raise MonoidError("residue %d not reduced modulo %d" % (r, m))

    def _make(self, free, res):
        return GradeElement(tuple(free), tuple(r % m for r, m in zip(res, self.mods)), self.mods)

    def __add__(self, other: "GradeElement") -> "GradeElement":
        if len(other.free) != len(self.free) or other.mods != self.mods:
            raise MonoidError("grade elements from different groups")
        return self._make((a + b for a, b in zip(self.free, other.free)),
                          [a + b for a, b in zip(self.res, other.res)])

    def __neg__(self) -> "GradeElement":
        return self._make((-a for a in self.free), [-r for r in self.res])

    def __sub__(self, other: "GradeElement") -> "GradeElement":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.res)

    def __repr__(self):
        if not self.res:
            return "[%s]" % ",".join(map(str, self.free))
        return "[%s;%s]" % (",".join(map(str, self.free)), ",".join(map(str, self.res)))


@dataclass(frozen=True)
class GradeGroup:
    """Z^rank + Z/m_1 + ... + Z/m_k."""
    rank: int = 1
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise MonoidError("negative rank")
        if any(m < 2 for m in self.torsion):
            raise MonoidError("torsion entries must be at least 2")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @classmethod
    def trivial(cls) -> "GradeGroup":
        return cls(0, ())

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def zero(self) -> GradeElement:
        return GradeElement((0,) * self.rank, (0,) * len(self.torsion), self.torsion)

    def element(self, free: Iterable[int] = (), res: Iterable[int] = (), reduce: bool = True) -> GradeElement:
        free = tuple(int(a) for a in free)
        res = tuple(int(r) for r in res)
        if len(free) != self.rank or len(res) != len(self.torsion):
            raise MonoidError("grade element has the wrong shape for %s" % (self,))
        if reduce:
            res = tuple(r % m for r, m in zip(res, self.torsion))
        return GradeElement(free, res, self.torsion)

    def __call__(self, *free: int) -> GradeElement:
        """Shorthand for torsion-free elements: ``Z(1)``."""
        return self.element(free, (0,) * len(self.torsion))

    def contains(self, g: GradeElement) -> bool:
        return len(g.free) == self.rank and g.mods == self.torsion

    def generators(self) -> list[GradeElement]:
        gens = []
        for i in range(self.rank):
            gens.append(self.element([1 if j == i else 0 for j in range(self.rank)], [0] * len(self.torsion)))
        for i in range(len(self.torsion)):
            gens.append(self.element([0] * self.rank, [1 if j == i else 0 for j in range(len(self.torsion))]))
        return gens

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append("Z^%d" % self.rank)
        parts += ["Z/%d" % m for m in self.torsion]
        return " x ".join(parts) if parts else "1"


Z = GradeGroup(1)

# ---------------------------------------------------------------- words

Key = tuple  # (generator name, GradeElement)


def key_order(k: Key):
    return (k[0], k[1].free, k[1].res)


class MWord:
    """Immutable finite multiset of (generator, grade) keys."""

    __slots__ = ("_items", "_hash")

    def __init__(self, items=None):
        acc: dict = {}
        if items:
            it = items.items() if isinstance(items, dict) else items
            for k, n in it:
                n = int(n)
                if n < 0:
                    raise MonoidError("negative multiplicity")
                if n:
                    acc[k] = acc.get(k, 0) + n
        self._items = tuple(sorted(acc.items(), key=lambda kv: key_order(kv[0])))
        self._hash = hash(self._items)

    @classmethod
    def of(cls, *terms) -> "MWord":
        """``MWord.of((2, 'p', g), ('q', g0))``: optional leading multiplicity."""
        out = []
        for t in terms:
            if isinstance(t[0], int):
                out.append(((t[1], t[2]), t[0]))
            else:
                out.append(((t[0], t[1]), 1))
        return cls(out)

    @classmethod
    def gen(cls, name: str, grade: GradeElement, mult: int = 1) -> "MWord":
        return cls([((name, grade), mult)])

    def items(self):
        return self._items

    def keys(self):
        return [k for k, _ in self._items]

    def mult(self, key) -> int:
        for k, n in self._items:
            if k == key:
                return n
        return 0

    def as_counter(self) -> Counter:
        return Counter(dict(self._items))

    def gens(self) -> set[str]:
        return {k[0] for k, _ in self._items}

    def length(self) -> int:
        return sum(n for _, n in self._items)

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def __add__(self, other: "MWord") -> "MWord":
        c = dict(self._items)
        for k, n in other._items:
            c[k] = c.get(k, 0) + n
        return MWord(c)

    def scale(self, n: int) -> "MWord":
        return MWord([(k, m * n) for k, m in self._items])

    def contains(self, other: "MWord") -> bool:
        mine = dict(self._items)
        return all(mine.get(k, 0) >= n for k, n in other._items)

    def __sub__(self, other: "MWord") -> "MWord":
        c = dict(self._items)
        for k, n in other._items:
            left = c.get(k, 0) - n
            if left < 0:
                raise MonoidError("word subtraction below zero")
            c[k] = left
        return MWord(c)

    def shift(self, d: GradeElement) -> "MWord":
        return MWord([((g, gr + d), n) for (g, gr), n in self._items])

    def sort_key(self):
        return tuple((g, gr.free, gr.res, n) for (g, gr), n in self._items)

    def __eq__(self, other):
        return isinstance(other, MWord) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self._items:
            return "0"
        parts = []
        for (g, gr), n in self._items:
            s = g if gr.is_zero() else "%s%r" % (g, gr)
            parts.append(s if n == 1 else "%d %s" % (n, s))
        return " + ".join(parts)


def word_add(a: MWord, b: MWord, generators: Optional[Iterable[str]] = None) -> MWord:
    if generators is not None:
        gs = set(generators)
        bad = (a.gens() | b.gens()) - gs
        if bad:
            raise MonoidError("undeclared generators: %s" % ", ".join(sorted(bad)))
    return a + b


def word_shift(w: MWord, d: GradeElement) -> MWord:
    return w.shift(d)


# ---------------------------------------------------------------- relations & presentations


class MRelation:
    """Shift-closed relation lhs = rhs; equality ignores orientation."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: MWord, rhs: MWord):
        self.lhs = lhs
        self.rhs = rhs

    def _pair(self):
        return tuple(sorted([self.lhs.sort_key(), self.rhs.sort_key()]))

    def __eq__(self, other):
        return isinstance(other, MRelation) and self._pair() == other._pair()

    def __hash__(self):
        return hash(self._pair())

    def shift(self, d: GradeElement) -> "MRelation":
        return MRelation(self.lhs.shift(d), self.rhs.shift(d))

    def canonical(self):
        """Orientation- and shift-independent normal form (hashable)."""
        best = None
        for x, y in ((self.lhs, self.rhs), (self.rhs, self.lhs)):
            anchor = x.keys()[0] if x else (y.keys()[0] if y else None)
            if anchor is None:
                cand = ((), ())
            else:
                d = -anchor[1]
                cand = (x.shift(d).sort_key(), y.shift(d).sort_key())
            if best is None or cand < best:
                best = cand
        return best

    def sort_key(self):
        return (self.lhs.sort_key(), self.rhs.sort_key())

    def __repr__(self):
        return "%r = %r" % (self.lhs, self.rhs)


@dataclass(frozen=True)
class MonoidPresentation:
    group: GradeGroup
    generators: tuple[str, ...]
    relations: tuple[MRelation, ...] = ()
    order_unit: Optional[MWord] = None

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        if len(gens) != len(tuple(self.generators)):
            raise MonoidError("duplicate generator names")
        object.__setattr__(self, "generators", gens)
        seen = []
        for r in self.relations:
            self._check(r.lhs)
            self._check(r.rhs)
            if r not in seen:
                seen.append(r)
        object.__setattr__(self, "relations", tuple(sorted(seen, key=MRelation.sort_key)))
        if self.order_unit is not None:
            self._check(self.order_unit)

    def _check(self, w: MWord):
        gs = set(self.generators)
        for g, gr in w.keys():
            if g not in gs:
                raise MonoidError("undeclared generator %r" % g)
            if not self.group.contains(gr):
                raise MonoidError("grade %r not in group %s" % (gr, self.group))

    def check_word(self, w: MWord) -> MWord:
        self._check(w)
        return w

    def unit_of_generators(self) -> MWord:
        z = self.group.zero()
        return MWord([((g, z), 1) for g in self.generators])


def free_presentation(group: GradeGroup, generators: Iterable[str], with_unit: bool = True) -> MonoidPresentation:
    gens = tuple(generators)
    p = MonoidPresentation(group, gens)
    return MonoidPresentation(group, gens, (), p.unit_of_generators() if with_unit else None)


def same_presentation(p: MonoidPresentation, q: MonoidPresentation) -> bool:
    """Same generators, order unit and shift-closed relations up to normalization."""
    return (p.group == q.group and p.generators == q.generators and p.order_unit == q.order_unit
            and {r.canonical() for r in p.relations} == {r.canonical() for r in q.relations})


def quotient_presentation(pres: MonoidPresentation, extra: Iterable[MRelation]) -> MonoidPresentation:
    return MonoidPresentation(pres.group, pres.generators, tuple(pres.relations) + tuple(extra), pres.order_unit)


# ---------------------------------------------------------------- decisions


@dataclass(frozen=True)
class Decision:
    verdict: str  # Equal | NotEqual | Unknown
    states: int = 0
    max_len: int = 0
    engine: str = ""
    note: str = ""

    @property
    def is_equal(self) -> bool:
        return self.verdict == "Equal"

    @property
    def is_not_equal(self) -> bool:
        return self.verdict == "NotEqual"

    @property
    def is_unknown(self) -> bool:
        return self.verdict == "Unknown"

    @property
    def truth(self) -> Optional[bool]:
        """For order queries: Equal reads as true, NotEqual as false."""
        return {"Equal": True, "NotEqual": False}.get(self.verdict)

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "states": self.states, "max_len": self.max_len,
                "engine": self.engine, "note": self.note}


def _dec(verdict, states=0, max_len=0, engine="", note=""):
    return Decision(verdict, states, max_len, engine, note)


def combine_truths(decisions: Iterable[Decision]) -> Decision:
    ds = list(decisions)
    if any(d.is_not_equal for d in ds):
        return _dec("NotEqual", engine="aggregate")
    if all(d.is_equal for d in ds):
        return _dec("Equal", engine="aggregate")
    return _dec("Unknown", engine="aggregate")


@dataclass(frozen=True)
class Budget:
    max_len: int = 64
    max_states: int = 200000
    shift_window: int = 8

    def __post_init__(self):
        if self.max_len <= 0 or self.max_states <= 0 or self.shift_window < 0:
            raise MonoidError("budget fields must be positive")


DEFAULT_BUDGET = Budget()
DEFAULT_DEPTH = 16
# beyond this many BFS states the window truncation is handed to completion
BFS_STATE_CAP = 5000


class _Window:
    """Box of grades: free coordinates bounded, torsion unrestricted."""

    def __init__(self, group: GradeGroup, words: Iterable[MWord], pad: int):
        self.group = group
        grades = [gr for w in words for _, gr in w.keys()]
        if not grades:
            grades = [group.zero()]
        self.lo = [min(g.free[i] for g in grades) - pad for i in range(group.rank)]
        self.hi = [max(g.free[i] for g in grades) + pad for i in range(group.rank)]

    def inside(self, gr: GradeElement) -> bool:
        return all(l <= a <= h for a, l, h in zip(gr.free, self.lo, self.hi))

    def word_inside(self, w: MWord) -> bool:
        return all(self.inside(gr) for _, gr in w.keys())

    def shifts_placing(self, grades: list[GradeElement]) -> Iterator[GradeElement]:
        """All d with every g + d inside the box."""
        g = self.group
        if grades:
            ranges = [range(self.lo[i] - min(x.free[i] for x in grades),
                            self.hi[i] - max(x.free[i] for x in grades) + 1) for i in range(g.rank)]
        else:
            ranges = [range(self.lo[i], self.hi[i] + 1) for i in range(g.rank)]
        tors = [range(m) for m in g.torsion]
        for free in itertools.product(*ranges):
            for res in itertools.product(*tors):
                yield g.element(free, res)

    def keys(self, generators) -> list:
        return [(x, gr) for x in generators for gr in self.shifts_placing([self.group.zero()])]


def _oriented(pres: MonoidPresentation):
    out = []
    for r in pres.relations:
        if r.lhs != r.rhs:
            out.append((r.lhs, r.rhs))
            out.append((r.rhs, r.lhs))
    return out


def _moves(w: MWord, oriented, window: _Window):
    """Single-relation rewrites of w staying inside the window."""
    for L, R in oriented:
        if L:
            k0, n0 = L.items()[0]
            shifts = {gr - k0[1] for (g, gr), n in w.items() if g == k0[0] and n >= n0}
            cands = []
            for d in shifts:
                Ld = L.shift(d)
                if w.contains(Ld):
                    cands.append((d, Ld))
        else:
            cands = [(d, L) for d in window.shifts_placing([gr for _, gr in R.keys()])]
        for d, Ld in cands:
            Rd = R.shift(d)
            if not window.word_inside(Rd) or not window.word_inside(Ld):
                continue
            yield (w - Ld) + Rd


def closure_decide(pres: MonoidPresentation, a: MWord, b: MWord, budget: Budget = DEFAULT_BUDGET) -> Decision:
    """Bounded congruence search inside a shift window.

    NotEqual is exact for finite grade groups and window-relative otherwise.
    """
    pres.check_word(a)
    pres.check_word(b)
    if a == b:
        return _dec("Equal", 1, a.length(), "closure-bfs")
    window = _Window(pres.group, [a, b], budget.shift_window)
    oriented = _oriented(pres)
    side = {a: 0, b: 1}
    queues = [deque([a]), deque([b])]
    pruned = False
    states = 2
    longest = max(a.length(), b.length())
    turn = 0
    cap = min(budget.max_states, BFS_STATE_CAP)
    while queues[0] or queues[1]:
        if not queues[turn]:
            turn = 1 - turn
        w = queues[turn].popleft()
        for nw in _moves(w, oriented, window):
            if nw.length() > budget.max_len:
                pruned = True
                continue
            s = side.get(nw)
            if s is None:
                side[nw] = turn
                queues[turn].append(nw)
                states += 1
                longest = max(longest, nw.length())
                if states >= cap:
                    break
            elif s != turn:
                return _dec("Equal", states, longest, "closure-bfs")
        if states >= cap:
            pruned = True
            break
        turn = 1 - turn
    rel_note = "" if pres.group.rank == 0 else "window-relative"
    if not pruned:
        return _dec("NotEqual", states, longest, "closure-bfs", rel_note)
    return _completion_decide(pres, a, b, window, budget, states, longest)


# commutative completion on the window truncation ---------------------------


def _completion_decide(pres, a, b, window: _Window, budget: Budget, states0: int, longest: int) -> Decision:
    keys = sorted({k for k in window.keys(pres.generators)}, key=key_order)
    index = {k: i for i, k in enumerate(keys)}
    n = len(keys)

    def vec(w: MWord):
        v = [0] * n
        for k, m in w.items():
            v[index[k]] += m
        return tuple(v)

    def greater(u, v):
        su, sv = sum(u), sum(v)
        if su != sv:
            return su > sv
        for x, y in zip(u, v):
            if x != y:
                return x > y
        return False

    rules: list = []

    def nf(v):
        v = list(v)
        changed = True
        while changed:
            changed = False
            for l, r in rules:
                if all(x >= y for x, y in zip(v, l)):
                    v = [x - y + z for x, y, z in zip(v, l, r)]
                    changed = True
                    break
        return tuple(v)

    work = 0
    pending = []
    for rel in pres.relations:
        grades = [gr for _, gr in rel.lhs.keys()] + [gr for _, gr in rel.rhs.keys()]
        for d in window.shifts_placing(grades):
            pending.append((vec(rel.lhs.shift(d)), vec(rel.rhs.shift(d))))
    pairs = deque()

    def add_rule(u, v):
        u, v = nf(u), nf(v)
        if u == v:
            return
        l, r = (u, v) if greater(u, v) else (v, u)
        for i in range(len(rules)):
            pairs.append((i, len(rules)))
        rules.append((l, r))

    for u, v in pending:
        add_rule(u, v)
        work += 1
    while pairs:
        work += 1
        if work > budget.max_states or len(rules) > 5000:
            return _dec("Unknown", states0 + work, longest, "completion", "completion budget exhausted")
        i, j = pairs.popleft()
        (l1, r1), (l2, r2) = rules[i], rules[j]
        if not any(x and y for x, y in zip(l1, l2)):
            continue
        m = [max(x, y) for x, y in zip(l1, l2)]
        s1 = tuple(p - x + y for p, x, y in zip(m, l1, r1))
        s2 = tuple(p - x + y for p, x, y in zip(m, l2, r2))
        add_rule(s1, s2)
    same = nf(vec(a)) == nf(vec(b))
    note = "" if pres.group.rank == 0 else "window-relative"
    return _dec("Equal" if same else "NotEqual", states0 + work, longest, "completion", note)


# ---------------------------------------------------------------- graph-shaped engine


def graph_rules(pres: MonoidPresentation) -> dict:
    """Map generator -> rhs (relative to lhs at grade 0) for graph-shaped presentations."""
    rules = {}
    for r in pres.relations:
        lhs, rhs = r.lhs, r.rhs
        if not (len(lhs) == 1 and lhs.length() == 1):
            lhs, rhs = rhs, lhs
        if not (len(lhs) == 1 and lhs.length() == 1):
            raise NotGraphShaped("relation %r has no single-generator side" % (r,))
        (g, gr), _ = lhs.items()[0]
        if g in rules:
            raise NotGraphShaped("generator %r has more than one relation" % g)
        rules[g] = rhs.shift(-gr)
    return rules


def is_graph_shaped(pres: MonoidPresentation) -> bool:
    try:
        graph_rules(pres)
        return True
    except NotGraphShaped:
        return False


def _exact_graph_ok(pres: MonoidPresentation, rules: dict) -> bool:
    if pres.group.rank != 1 or pres.group.torsion:
        return False
    return all(gr.free[0] >= 1 for rhs in rules.values() for _, gr in rhs.keys())


def _level_step(D: dict, rules: dict, t: int, group: GradeGroup):
    for key in [k for k in D if k[1].free[0] == t and k[0] in rules]:
        c = D.pop(key)
        for (g, gr), n in rules[key[0]].items():
            k2 = (g, gr + group(t))
            v = D.get(k2, 0) + c * n
            if v:
                D[k2] = v
            else:
                D.pop(k2, None)


def graph_decide(pres: MonoidPresentation, a: MWord, b: MWord, depth: int = DEFAULT_DEPTH) -> Decision:
    """Forward-rewriting decision for graph-shaped presentations.

    Over Z with strictly positive relation shifts this compares the grade
    sweeps R_t(a), R_t(b) (all non-sink keys below t rewritten), which agree
    for some t exactly when a = b.
    """
    if depth <= 0:
        raise MonoidError("depth must be positive")
    rules = graph_rules(pres)
    pres.check_word(a)
    pres.check_word(b)
    if a == b:
        return _dec("Equal", 0, a.length(), "graph")
    if not _exact_graph_ok(pres, rules):
        return _graph_generic(pres, rules, a, b, depth)
    D: dict = {}
    for k, n in a.items():
        D[k] = D.get(k, 0) + n
    for k, n in b.items():
        D[k] = D.get(k, 0) - n
        if not D[k]:
            del D[k]
    t = min(k[1].free[0] for k in D)
    t_top = max(k[1].free[0] for w in (a, b) for k in w.keys())
    width = max([gr.free[0] for rhs in rules.values() for _, gr in rhs.keys()] + [1])
    dim = len(pres.generators) * width
    steps = quiet = 0
    while True:
        _level_step(D, rules, t, pres.group)
        if any(k[1].free[0] <= t for k in D):
            return _dec("NotEqual", steps + 1, 0, "graph", "sink mismatch at grade %d" % t)
        if not D:
            return _dec("Equal", steps + 1, 0, "graph")
        steps += 1
        if t >= t_top:
            quiet += 1
            if quiet > dim:
                return _dec("NotEqual", steps, 0, "graph", "difference never vanishes")
        if steps >= depth:
            return _dec("Unknown", steps, 0, "graph", "depth exhausted")
        t += 1


def _rewrite_key(w: MWord, key, rules) -> MWord:
    n = w.mult(key)
    g, gr = key
    return (w - MWord([(key, n)])) + rules[g].shift(gr).scale(n)


def _graph_generic(pres, rules, a, b, depth) -> Decision:
    seen = [{a}, {b}]
    frontier = [[a], [b]]
    states = 2
    for _ in range(depth):
        for s in (0, 1):
            nxt = []
            for w in frontier[s]:
                for key in w.keys():
                    if key[0] in rules:
                        nw = _rewrite_key(w, key, rules)
                        if nw in seen[1 - s]:
                            return _dec("Equal", states, 0, "graph")
                        if nw not in seen[s]:
                            seen[s].add(nw)
                            nxt.append(nw)
                            states += 1
            frontier[s] = nxt
        if states > 50000:
            break
    nfs = []
    for w in (a, b):
        cur = w
        for _ in range(depth):
            red = [k for k in cur.keys() if k[0] in rules]
            if not red:
                break
            for k in red:
                cur = _rewrite_key(cur, k, rules)
        if any(k[0] in rules for k in cur.keys()):
            return _dec("Unknown", states, 0, "graph", "depth exhausted")
        nfs.append(cur)
    if nfs[0] == nfs[1]:
        return _dec("Equal", states, 0, "graph")
    return _dec("NotEqual", states, 0, "graph", "distinct normal forms")


def _graph_leq(pres, rules, a, b, depth) -> Decision:
    D: dict = {}
    for k, n in b.items():
        D[k] = D.get(k, 0) + n
    for k, n in a.items():
        D[k] = D.get(k, 0) - n
        if not D[k]:
            del D[k]
    if all(v >= 0 for v in D.values()):
        return _dec("Equal", 0, 0, "graph-leq")
    t = min(k[1].free[0] for k in D)
    for steps in range(1, depth + 1):
        _level_step(D, rules, t, pres.group)
        if all(v >= 0 for v in D.values()):
            return _dec("Equal", steps, 0, "graph-leq")
        if any(v < 0 and k[1].free[0] <= t for k, v in D.items()):
            return _dec("NotEqual", steps, 0, "graph-leq", "deficit on a sink")
        t += 1
    return _dec("Unknown", depth, 0, "graph-leq", "depth exhausted")


# ---------------------------------------------------------------- order queries


def _reach(pres, start: MWord, window, oriented, budget, cap):
    seen = {start}
    q = deque([start])
    pruned = False
    while q:
        w = q.popleft()
        for nw in _moves(w, oriented, window):
            if nw.length() > budget.max_len:
                pruned = True
                continue
            if nw not in seen:
                seen.add(nw)
                q.append(nw)
                if len(seen) >= cap:
                    return seen, True
    return seen, pruned


def _support_closure(pres: MonoidPresentation, keys: set, window: _Window) -> set:
    """Over-approximation of the keys any word equal to one supported on ``keys`` can use."""
    K = set(k for k in keys if window.inside(k[1]))
    oriented = _oriented(pres)
    changed = True
    while changed:
        changed = False
        for L, R in oriented:
            if L:
                k0 = L.keys()[0]
                shifts = {gr - k0[1] for (g, gr) in K if g == k0[0]}
            else:
                shifts = set(window.shifts_placing([gr for _, gr in R.keys()]))
            for d in shifts:
                if all((g, gr + d) in K for g, gr in L.keys()):
                    for g, gr in R.keys():
                        k = (g, gr + d)
                        if k not in K and window.inside(k[1]):
                            K.add(k)
                            changed = True
    return K


def leq_decide(pres: MonoidPresentation, a: MWord, b: MWord, budget: Budget = DEFAULT_BUDGET,
               depth: int = DEFAULT_DEPTH) -> Decision:
    """Is there p with a + p = b?  Equal reads as true."""
    pres.check_word(a)
    pres.check_word(b)
    if not a or b.contains(a):
        return _dec("Equal", 0, b.length(), "leq")
    if is_graph_shaped(pres):
        rules = graph_rules(pres)
        if _exact_graph_ok(pres, rules):
            return _graph_leq(pres, rules, a, b, depth)
    window = _Window(pres.group, [a, b], budget.shift_window)
    closure = _support_closure(pres, set(b.keys()), window)
    if window.word_inside(a) and not set(a.keys()) <= closure:
        reach_a, _ = _reach(pres, a, window, _oriented(pres), budget, 2000)
        if all(not set(u.keys()) <= closure for u in reach_a):
            return _dec("NotEqual", len(reach_a), 0, "leq", "support closure")
    oriented = _oriented(pres)
    cap_a = max(1, min(2000, budget.max_states // 10))
    A, pruned_a = _reach(pres, a, window, oriented, budget, cap_a)
    A = list(A)
    seen = {b}
    q = deque([b])
    pruned_b = False
    while q:
        w = q.popleft()
        if any(w.contains(u) for u in A):
            return _dec("Equal", len(seen) + len(A), 0, "leq")
        for nw in _moves(w, oriented, window):
            if nw.length() > budget.max_len:
                pruned_b = True
                continue
            if nw not in seen:
                seen.add(nw)
                q.append(nw)
        if len(seen) + len(A) >= budget.max_states:
            pruned_b = True
            break
    if not pruned_a and not pruned_b:
        return _dec("NotEqual", len(seen) + len(A), 0, "leq",
                    "" if pres.group.rank == 0 else "window-relative")
    return _dec("Unknown", len(seen) + len(A), 0, "leq", "budget exhausted")


def _sum_shifts(i: MWord, shifts) -> MWord:
    out = MWord()
    for d in shifts:
        out = out + i.shift(d)
    return out


def order_unit_check(pres: MonoidPresentation, i: MWord, probes: list[MWord],
                     budget: Budget = DEFAULT_BUDGET, max_multiple: int = 8) -> list[Decision]:
    """For each probe m: is m <= sum of shifts of i?"""
    if not probes:
        raise MonoidError("probes must be nonempty")
    pres.check_word(i)
    out = []
    for m in probes:
        pres.check_word(m)
        if not m:
            out.append(_dec("Equal", engine="order-unit"))
            continue
        shifts = {pres.group.zero()}
        for (g, gm) in m.keys():
            for (h, gi) in i.keys():
                if g == h:
                    shifts.add(gm - gi)
        base = _sum_shifts(i, sorted(shifts))
        found = None
        for k in range(1, max_multiple + 1):
            d = leq_decide(pres, m, base.scale(k), budget)
            if d.is_equal:
                found = d
                break
        if found is not None:
            out.append(found)
            continue
        window = _Window(pres.group, [m, i], budget.shift_window)
        allshift = _sum_shifts(i, list(window.shifts_placing([gr for _, gr in i.keys()])))
        closure = _support_closure(pres, set(allshift.keys()), window)
        if not set(m.keys()) <= closure:
            out.append(_dec("NotEqual", engine="order-unit", note="support closure"))
        else:
            out.append(_dec("Unknown", engine="order-unit", note="no bound found"))
    return out


def strong_order_unit_check(pres: MonoidPresentation, i: MWord, probes: list[MWord],
                            budget: Budget = DEFAULT_BUDGET, max_multiple: int = 8) -> list[Decision]:
    """For each probe m: is m <= k*i for some k (no shifts)?"""
    if not probes:
        raise MonoidError("probes must be nonempty")
    pres.check_word(i)
    out = []
    for m in probes:
        pres.check_word(m)
        if not m:
            out.append(_dec("Equal", engine="strong-order-unit"))
            continue
        found = None
        last = None
        for k in range(1, max_multiple + 1):
            last = leq_decide(pres, m, i.scale(k), budget)
            if last.is_equal:
                found = last
                break
        if found is not None:
            out.append(found)
            continue
        window = _Window(pres.group, [m, i], budget.shift_window)
        closure = _support_closure(pres, set(i.keys()), window)
        if not set(m.keys()) <= closure:
            out.append(_dec("NotEqual", engine="strong-order-unit", note="support closure"))
        else:
            out.append(_dec("Unknown", engine="strong-order-unit",
                            note="no multiple up to %d found" % max_multiple))
    return out


def decide(pres: MonoidPresentation, a: MWord, b: MWord, budget: Budget = DEFAULT_BUDGET,
           depth: int = DEFAULT_DEPTH) -> Decision:
    """Engine auto-selection: graph-shaped presentations use graph_decide."""
    if is_graph_shaped(pres):
        d = graph_decide(pres, a, b, depth)
        if not d.is_unknown:
            return d
    return closure_decide(pres, a, b, budget)


def invariant_order_unit_check(pres: MonoidPresentation, i: MWord, budget: Budget = DEFAULT_BUDGET,
                               depth: int = DEFAULT_DEPTH) -> Decision:
    """Does every group generator fix i?"""
    pres.check_word(i)
    ds = [decide(pres, i.shift(g), i, budget, depth) for g in pres.group.generators()]
    if not ds:
        return _dec("Equal", engine="invariant-unit", note="trivial group")
    return combine_truths(ds)
