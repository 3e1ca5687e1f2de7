"""Exact linear algebra over k^T (a finite product of copies of a field, in degree 0)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import QQ, Field, fmt_scalar
from .gamma_monoid import GradeElement


class IdempotentError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class RingElem:
    """Element of k^T, one scalar per component."""

    __slots__ = ("vals",)

    def __init__(self, vals: Sequence):
        self.vals = tuple(vals)

    def __add__(self, other: "RingElem") -> "RingElem":
        return RingElem(a + b for a, b in zip(self.vals, other.vals))

    def __sub__(self, other: "RingElem") -> "RingElem":
        return RingElem(a - b for a, b in zip(self.vals, other.vals))

    def __mul__(self, other: "RingElem") -> "RingElem":
        return RingElem(a * b for a, b in zip(self.vals, other.vals))

    def __neg__(self):
        return RingElem(-a for a in self.vals)

    def is_zero(self) -> bool:
        return not any(self.vals)

    def __eq__(self, other):
        return isinstance(other, RingElem) and self.vals == other.vals

    def __hash__(self):
        return hash(self.vals)

    def __repr__(self):
        return "(%s)" % ", ".join(fmt_scalar(v) for v in self.vals)


@dataclass(frozen=True)
class SemisimpleRing:
    components: tuple[str, ...]
    field: Field = QQ

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a semisimple ring needs at least one component")
        if len(set(comps)) != len(comps):
            raise ValueError("duplicate component labels")
        object.__setattr__(self, "components", comps)

    @property
    def size(self) -> int:
        return len(self.components)

    def index(self, t: str) -> int:
        try:
            return self.components.index(t)
        except ValueError:
            raise ValueError("unknown component %r" % t) from None

    def elem(self, vals) -> RingElem:
        vals = list(vals)
        if len(vals) != self.size:
            raise ValueError("ring element needs %d components" % self.size)
        return RingElem(self.field(v) for v in vals)

    def scalar(self, c) -> RingElem:
        return RingElem([self.field(c)] * self.size)

    def eps(self, t: str) -> RingElem:
        i = self.index(t)
        return self.elem([1 if j == i else 0 for j in range(self.size)])

    @property
    def zero(self) -> RingElem:
        return self.scalar(0)

    @property
    def one(self) -> RingElem:
        return self.scalar(1)

    def terms(self, x: RingElem) -> list[tuple[str, object]]:
        """Nonzero (component, coefficient) pairs of x."""
        return [(t, c) for t, c in zip(self.components, x.vals) if c]


Matrix = tuple  # tuple of rows of RingElem


def mat_mul(ring: SemisimpleRing, a, b):
    if not a:
        return ()
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("matrix shapes do not match")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ring.zero
            for k in range(inner):
                acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def identity_matrix(ring: SemisimpleRing, n: int):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class ShiftedIdempotent:
    ring: SemisimpleRing
    shifts: tuple[GradeElement, ...]
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.shifts)

    def component(self, k: int) -> list[list]:
        return [[x.vals[k] for x in row] for row in self.entries]


def idempotent_violations(ring: SemisimpleRing, entries, shifts) -> list[str]:
    n = len(shifts)
    out = []
    if len(entries) != n or any(len(r) != n for r in entries):
        return ["matrix is not %dx%d" % (n, n)]
    for i in range(n):
        for j in range(n):
            if shifts[i] != shifts[j] and not entries[i][j].is_zero():
                out.append("entry (%d,%d) nonzero across shifts %r and %r" % (i + 1, j + 1, shifts[i], shifts[j]))
    if mat_mul(ring, entries, entries) != tuple(tuple(r) for r in entries):
        out.append("e*e != e")
    return out


def validate_idempotent(ring: SemisimpleRing, entries, shifts) -> ShiftedIdempotent:
    entries = tuple(tuple(r) for r in entries)
    shifts = tuple(shifts)
    bad = idempotent_violations(ring, entries, shifts)
    if bad:
        raise IdempotentError(bad)
    return ShiftedIdempotent(ring, shifts, entries)


def diagonal_idempotent(ring: SemisimpleRing, slots) -> ShiftedIdempotent:
    n = len(slots)
    entries = tuple(tuple(ring.eps(slots[i][0]) if i == j else ring.zero for j in range(n)) for i in range(n))
    return ShiftedIdempotent(ring, tuple(s for _, s in slots), entries)


@dataclass(frozen=True)
class DiagonalIdempotent:
    slots: tuple  # ((component, shift), ...)

    def as_idempotent(self, ring: SemisimpleRing) -> ShiftedIdempotent:
        return diagonal_idempotent(ring, self.slots)


@dataclass(frozen=True)
class EquivalenceWitness:
    x: tuple  # m x r
    y: tuple  # r x m


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; pivots chosen leftmost-first."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def diagonalize(e: ShiftedIdempotent) -> tuple[DiagonalIdempotent, EquivalenceWitness]:
    ring = e.ring
    n = e.n
    zero = ring.field.zero
    pieces = []  # (pivot column, component index, row of R_t, column of C_t)
    for k in range(ring.size):
        M = e.component(k)
        R, piv = rref(M)
        for s, p in enumerate(piv):
            pieces.append((p, k, R[s], [M[i][p] for i in range(n)]))
    pieces.sort(key=lambda q: (q[0], q[1]))
    r = len(pieces)
    slots = tuple((ring.components[k], e.shifts[p]) for p, k, _, _ in pieces)

    def lift(k, c):
        vals = [zero] * ring.size
        vals[k] = c
        return RingElem(vals)

    x = tuple(tuple(lift(pieces[s][1], pieces[s][3][i]) for s in range(r)) for i in range(n))
    y = tuple(tuple(lift(pieces[s][1], pieces[s][2][j]) for j in range(n)) for s in range(r))
    return DiagonalIdempotent(slots), EquivalenceWitness(x, y)


def check_witness(e: ShiftedIdempotent, diag: DiagonalIdempotent, w: EquivalenceWitness) -> bool:
    ring = e.ring
    d = diag.as_idempotent(ring)
    if not w.x:  # zero idempotent of size n
        return all(v.is_zero() for row in e.entries for v in row) and not diag.slots
    if not w.x[0]:
        return all(v.is_zero() for row in e.entries for v in row) and not diag.slots
    return mat_mul(ring, w.x, w.y) == e.entries and mat_mul(ring, w.y, w.x) == d.entries
