"""
Finite pieces of a smash product
================================

For a finite window A of grades, T_A carries the absorption relations and B_A
does not.  Each absorption relation is proved in B_A by a replayable rewrite trace.
"""

from gammalg.bergman import BergmanData, BergmanPair
from gammalg.field import QQ
from gammalg.gamma_monoid import Z
from gammalg.linalg_ss import SemisimpleRing, identity_matrix, validate_idempotent
from gammalg.smash import smash_comparison_check, window

R = SemisimpleRing(("v",), QQ)
e = validate_idempotent(R, [[R.one]], [Z(0)])
f = validate_idempotent(R, identity_matrix(R, 2), [Z(1), Z(1)])
data = BergmanData(R, Z, (BergmanPair("g", e, f),))

for A in ([Z(0)], [Z(0), Z(1)]):
    rep = smash_comparison_check(data, A)
    print("A =", A, " window", window(data, A), " generators", len(rep.T.generators))
    for rel, status, ok in rep.obligations[:3]:
        print("   ", rel, "|", status, "trace ok" if ok else "trace FAILED")
    print("    all", len(rep.obligations), "proved:", rep.passed)
