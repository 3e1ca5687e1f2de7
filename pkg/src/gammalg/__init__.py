"""Graded monoids, Bergman algebras and weighted hypergraph Leavitt path algebras, by presentation."""
from .field import QQ, Field
from .gamma_monoid import (Budget, Decision, GradeElement, GradeGroup, MonoidPresentation, MRelation, MWord, Z,
                           closure_decide, decide, graph_decide, leq_decide, order_unit_check, same_presentation)
from .algpres import (AGen, AlgebraPresentation, ARelation, Poly, Rule, bounded_rewrite_prove, homogeneity_check,
                      rename_equal, verify_trace)
from .linalg_ss import SemisimpleRing, ShiftedIdempotent, diagonalize, validate_idempotent
from .bergman import (BergmanData, BergmanPair, bergman_idem_presentation, bergman_presentation,
                      bergman_to_hypergraph, hypergraph_to_bergman, localization_presentation)
from .hyperlpa import (Edge, Graph, HEdge, Hypergraph, WeightMap, graph_to_hypergraph, hyper_lpa_presentation,
                       hyper_vgr_presentation, localization_chain_check, lpa_presentation, rose,
                       talented_presentation)
from .vmonoid import (HomBounds, ProjectiveSpec, grading_structure_check, hom_search, realize, vgr_adjoin_split,
                      vgr_quotient)
from .smash import (IdemData, smash_comparison_check, smash_BA_presentation, smash_ring_presentation,
                    smash_TA_presentation)
from .specio import ParseError, SpecDocument, dump, parse

__version__ = "0.1.0"
