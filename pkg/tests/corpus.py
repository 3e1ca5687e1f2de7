"""Seeded random objects shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

from gammalg import Z
from gammalg.bergman import BergmanData, BergmanPair
from gammalg.field import QQ
from gammalg.gamma_monoid import GradeGroup, MonoidPresentation, MRelation, MWord
from gammalg.hyperlpa import Edge, Graph, HEdge, Hypergraph, WeightMap, rose
from gammalg.linalg_ss import RingElem, SemisimpleRing, validate_idempotent

VERTS = ["u", "v", "w", "x"]


def random_hypergraph(rng: random.Random, name="H"):
    nv = rng.randint(1, 4)
    verts = VERTS[:nv]
    hedges, table = [], {}
    for k in range(rng.randint(1, 3)):
        I, J = rng.randint(1, 3), rng.randint(1, 3)
        src = tuple(rng.choice(verts) for _ in range(I))
        rng_ = tuple(rng.choice(verts) for _ in range(J))
        a = (Z(0),) + tuple(Z(rng.randint(-2, 2)) for _ in range(I - 1))
        b = tuple(Z(rng.randint(-2, 2)) for _ in range(J))
        hedges.append(HEdge("h%d" % (k + 1), src, rng_))
        table["h%d" % (k + 1)] = (a, b)
    return Hypergraph(tuple(verts), tuple(hedges), name), WeightMap(Z, table)


def random_graph(rng: random.Random, sink_free=False, name="E") -> Graph:
    nv = rng.randint(1, 4)
    verts = VERTS[:nv]
    edges, k = [], 0
    for v in verts:
        lo = 1 if sink_free else 0
        for _ in range(rng.randint(lo, 2)):
            k += 1
            edges.append(Edge("e%d" % k, v, rng.choice(verts)))
    return Graph(tuple(verts), tuple(edges), name)


def fixture_graphs() -> list[Graph]:
    out = [rose(1), rose(2), rose(3),
           Graph(("u", "v"), (Edge("a", "u", "v"), Edge("b", "v", "u")), "cycle2"),
           Graph(("v",), (), "point"),
           Graph(("u", "v", "w"), (Edge("a", "u", "v"), Edge("b", "u", "w"), Edge("c", "v", "v")), "tree")]
    return out


def sink_free_graphs() -> list[Graph]:
    rng = random.Random(5)
    out = [rose(1), rose(2), rose(3),
           Graph(("u", "v"), (Edge("a", "u", "v"), Edge("b", "v", "u")), "cycle2"),
           Graph(("u", "v"), (Edge("a", "u", "u"), Edge("b", "u", "v"), Edge("c", "v", "v")), "toeplitz")]
    while len(out) < 10:
        out.append(random_graph(rng, sink_free=True, name="G%d" % len(out)))
    return out


def _unitriangular_conj(rng, n):
    """P = I + N (N strictly lower, integer) and its inverse."""
    N = [[Fraction(rng.randint(-1, 1)) if j < i else Fraction(0) for j in range(n)] for i in range(n)]
    I = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    N2 = mul(N, N)
    P = [[I[i][j] + N[i][j] for j in range(n)] for i in range(n)]
    Pi = [[I[i][j] - N[i][j] + N2[i][j] for j in range(n)] for i in range(n)]
    return P, Pi, mul


def random_idempotent(rng, ring: SemisimpleRing, n: int, lo=-2, hi=2):
    """A homogeneous idempotent: shifts constant on blocks, each block conjugated by a unitriangular matrix."""
    block_shifts = [Z(rng.randint(lo, hi)) for _ in range(rng.randint(1, n))]
    shifts = sorted(rng.choice(block_shifts) for _ in range(n))
    comps = []
    for _ in ring.components:
        M = [[Fraction(0)] * n for _ in range(n)]
        for s in set(shifts):
            idx = [i for i in range(n) if shifts[i] == s]
            k = len(idx)
            P, Pi, mul = _unitriangular_conj(rng, k)
            D = [[Fraction(int(i == j and rng.random() < 0.6)) for j in range(k)] for i in range(k)]
            E = mul(mul(P, D), Pi)
            for a, i in enumerate(idx):
                for b, j in enumerate(idx):
                    M[i][j] = E[a][b]
        comps.append(M)
    entries = [[RingElem([QQ(M[i][j]) for M in comps]) for j in range(n)] for i in range(n)]
    return validate_idempotent(ring, entries, shifts)


def random_bergman(rng: random.Random) -> BergmanData:
    comps = tuple(["s", "t", "r"][:rng.randint(1, 3)])
    ring = SemisimpleRing(comps, QQ)
    pairs = []
    for k in range(rng.randint(1, 2)):
        while True:
            e = random_idempotent(rng, ring, rng.randint(1, 3))
            f = random_idempotent(rng, ring, rng.randint(1, 3))
            if _nonzero(e) and _nonzero(f):
                break
        pairs.append(BergmanPair("p%d" % (k + 1), e, f))
    return BergmanData(ring, Z, tuple(pairs))


def _nonzero(e) -> bool:
    return any(not x.is_zero() for row in e.entries for x in row)


def random_group(rng) -> GradeGroup:
    return rng.choice([GradeGroup.trivial(), Z, GradeGroup(2), GradeGroup(1, (3,)), GradeGroup(0, (2,))])


def random_element(rng, G: GradeGroup):
    return G.element([rng.randint(-3, 3) for _ in range(G.rank)], [rng.randint(0, m - 1) for m in G.torsion])


def random_word(rng, G, gens, allow_zero=True) -> MWord:
    if allow_zero and rng.random() < 0.1:
        return MWord()
    terms = [((rng.choice(gens), random_element(rng, G)), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    return MWord(terms)


def random_monoid(rng) -> MonoidPresentation:
    G = random_group(rng)
    gens = sorted(rng.sample(["p", "q", "r", "s1", "t_2"], rng.randint(0, 4)))
    if not gens:
        return MonoidPresentation(G, (), (), None)
    rels = [MRelation(random_word(rng, G, gens), random_word(rng, G, gens)) for _ in range(rng.randint(0, 3))]
    unit = random_word(rng, G, gens) if rng.random() < 0.7 else None
    return MonoidPresentation(G, tuple(gens), tuple(rels), unit)
