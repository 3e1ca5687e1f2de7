"""
Talented monoids of roses
=========================

A rose with n petals gives the relation v = n v[1].  Equalities are decided
exactly, and graded homomorphisms between roses are searched for within bounds.
"""

from gammalg import decide, talented_presentation, rose
from gammalg.gamma_monoid import MWord, Z
from gammalg.specio import dump, monoid_doc
from gammalg.vmonoid import HomBounds, hom_search

T = talented_presentation(rose(2))
print(dump(monoid_doc(T, "T")))

v = lambda k, m=1: MWord.gen("v", Z(k), m)

# v and 4 v[2] are equal; v and v[1] are not
for a, b in [(v(0), v(2, 4)), (v(0), v(1)), (v(1, 2), v(3, 8))]:
    print(a, "=?", b, "->", decide(T, a, b).verdict)

# pointed maps only exist between roses with the same number of petals
bounds = HomBounds(2, 1, 2)
for n, m in [(2, 2), (3, 3), (4, 2), (2, 4)]:
    res = hom_search(rose(n), rose(m), bounds, require_pointed=True)
    print("rose%d -> rose%d:" % (n, m), res.certificate.assignment if res.found else "none within bounds")
