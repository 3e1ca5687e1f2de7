"""
Leavitt algebras from Bergman data
==================================

The pair (1, I_2) over a field, with the second idempotent shifted by one,
presents L(1,2).  Its weighted hypergraph is a single hyperedge and the
monoid of graded projectives is the talented monoid of the two-petal rose.
"""

from gammalg.bergman import BergmanData, BergmanPair, bergman_presentation, bergman_to_hypergraph
from gammalg.field import QQ
from gammalg.gamma_monoid import Z, same_presentation
from gammalg.hyperlpa import hyper_vgr_presentation, rose, talented_presentation
from gammalg.linalg_ss import SemisimpleRing, identity_matrix, validate_idempotent
from gammalg.specio import dump, format_algebra, hypergraph_doc

R = SemisimpleRing(("v",), QQ)
e = validate_idempotent(R, [[R.one]], [Z(0)])
f = validate_idempotent(R, identity_matrix(R, 2), [Z(1), Z(1)])
data = BergmanData(R, Z, (BergmanPair("g", e, f),))

print(format_algebra(bergman_presentation(data, 4), "L12"))

H, w, _ = bergman_to_hypergraph(data)
print(dump(hypergraph_doc(H, w)))

M = hyper_vgr_presentation(H, w)
print("same as talented monoid of rose2:", same_presentation(M, talented_presentation(rose(2))))
