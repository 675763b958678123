"""Exact slope invariants of twisted matrices over Laurent-series fields.

The package computes Hodge points (elementary-divisor valuations), Newton
points (eigenvalue valuations of the Frobenius norm), and refined signatures
of square matrices over F_{p^m}((pi)), together with the combinatorics that
compare them: dominance order, slope metrics, minimal elements, and the
restriction-of-scalars models used in the two arithmetic-geometry
applications.
"""

from .coeffs import FFElem, FieldCtx, field_make, ff_arith, frobenius
from .cochar import (Cocharacter, NewtonPolygon, dominates, metric, min_gap,
                     oplus, oplus_w0, polygon, superbasic_parts)
from .invariants import (StrataSignature, congruence_stability, convergence_trace,
                         decency_check, gl2_recover, hodge_point, hodge_sequence,
                         minimal_element, newton_point, sln_counterexample,
                         stratum_scan)
from .laurent import LaurentSeries, ls_add, ls_inv, ls_mul, ls_rebase, ls_sigma, ls_val
from .matl import MatL, char_poly, mat_inv, mat_mul, mat_sigma, norm_map, smith_slopes, twisted_power
from .resgroups import (DisplayParams, GOType, ResElement, ag_display, ag_invariants,
                        ag_lambda, base_change_check, go_beta, go_generic_matrix,
                        go_lambda, go_type, res_hodge, res_newton, res_twisted_power)

__version__ = "0.1.0"

__all__ = [
    "FFElem", "FieldCtx", "field_make", "ff_arith", "frobenius",
    "Cocharacter", "NewtonPolygon", "dominates", "metric", "min_gap",
    "oplus", "oplus_w0", "polygon", "superbasic_parts",
    "LaurentSeries", "ls_add", "ls_inv", "ls_mul", "ls_rebase", "ls_sigma", "ls_val",
    "MatL", "char_poly", "mat_inv", "mat_mul", "mat_sigma", "norm_map",
    "smith_slopes", "twisted_power",
    "StrataSignature", "congruence_stability", "convergence_trace", "decency_check",
    "gl2_recover", "hodge_point", "hodge_sequence", "minimal_element", "newton_point",
    "sln_counterexample", "stratum_scan",
    "DisplayParams", "GOType", "ResElement", "ag_display", "ag_invariants",
    "ag_lambda", "base_change_check", "go_beta", "go_generic_matrix", "go_lambda",
    "go_type", "res_hodge", "res_newton", "res_twisted_power",
]
