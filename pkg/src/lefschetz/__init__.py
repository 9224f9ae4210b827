"""Weak and strong Lefschetz properties of artinian algebras, decided
with exact integer arithmetic.

Highlights: WLP/SLP decision procedures for monomial ideals in any
characteristic, bad-prime certificates, determinant and lozenge-tiling
equivalences for almost complete intersections in three variables, and
probabilistic (but certification-aware) WLP checks for ideals of powers
of general linear forms.
"""

from .aci import (AciData, aci_data, aci_ideal, bipartite_multiplication_graph,
                  brenner_kaid_char2, build_N, build_Z, count_matchings,
                  find_matching, li_zanello_equiv, macmahon,
                  plane_partitions_bruteforce, region_graph, wlp_via_det)
from .engine import (BadPrimeCertificate, HauselResult, LefschetzReport,
                     bad_primes, decide_slp, decide_wlp, hausel_check,
                     mult_matrix)
from .intlinalg import (Factorization, IntegerMatrix, determinant, factor,
                        nonzero_maximal_minor, rank_exact, rank_exact_modular,
                        rank_mod_p)
from .linforms import (LinearFormConfig, ProbabilisticVerdict, ei_fatpoint_dim,
                       froberg_prediction, power_ideal_hf, predict_4vars,
                       predict_5vars, predict_uniform, sample_config,
                       wlp_general_forms, wlp_powers)
from .monomials import (HVector, Monomial, MonomialIdeal,
                        complete_intersection, ideal_from_socle_monomials,
                        minimalize, monomials_of_degree, random_level_ideal)
from .parsing import IdealExpr, IdealSyntaxError, UndeclaredVariable, parse_ideal, unparse
from .sequences import (hausel_halfcheck, is_differentiable_O, is_O_sequence,
                        is_SI_sequence, is_strictly_unimodal, is_unimodal,
                        macaulay_bound, wlp_hilbert_shape)

__version__ = "0.1.0"

__all__ = [
    "AciData", "BadPrimeCertificate", "Factorization", "HVector",
    "HauselResult", "IdealExpr", "IdealSyntaxError", "IntegerMatrix",
    "LefschetzReport", "LinearFormConfig", "Monomial", "MonomialIdeal",
    "ProbabilisticVerdict", "UndeclaredVariable", "aci_data", "aci_ideal",
    "bad_primes", "bipartite_multiplication_graph", "brenner_kaid_char2",
    "build_N", "build_Z", "complete_intersection", "count_matchings",
    "decide_slp", "decide_wlp", "determinant", "ei_fatpoint_dim", "factor",
    "find_matching", "froberg_prediction", "hausel_check", "hausel_halfcheck",
    "ideal_from_socle_monomials", "is_O_sequence", "is_SI_sequence",
    "is_differentiable_O", "is_strictly_unimodal", "is_unimodal",
    "li_zanello_equiv", "macaulay_bound", "macmahon", "minimalize",
    "monomials_of_degree", "mult_matrix", "nonzero_maximal_minor",
    "parse_ideal", "plane_partitions_bruteforce", "power_ideal_hf",
    "predict_4vars", "predict_5vars", "predict_uniform", "random_level_ideal",
    "rank_exact", "rank_exact_modular", "rank_mod_p", "region_graph",
    "sample_config", "unparse", "wlp_general_forms", "wlp_hilbert_shape",
    "wlp_powers", "wlp_via_det",
]
