"""Recognition and repair of the simultaneous consecutive ones property."""

from .forbidden import (FIXED_KINDS, ForbiddenHit, ForbiddenPattern,
                        find_fixed_forbidden, find_forbidden, find_min_MIk,
                        matches_configuration, template_rows)
from .generate import gen_instance
from .graphs import (BipartiteGraph, Graph, GraphFormatError, Hole,
                     connected_components, find_hole, find_induced_4cycle,
                     half_adjacency, is_chordal_bipartite, representing_graph,
                     rule2_contract_4cycle, rule3_prune)
from .matrix import (BinaryMatrix, Certificate, CertificateError,
                     FlipSourceError, MatrixClass, MatrixFormatError,
                     ProblemKind, UnknownLabelError, VerifyResult,
                     WeightedMatrix, apply_certificate, classify,
                     dedupe_weighted, verify_certificate)
from .oracle import OracleGuardError, oracle
from .recognize import Witness, brute_sc1p, c1p_rows, check_witness, has_sc1p
from .reductions import (brute_hamiltonian_path, is_chain_matrix,
                         is_chain_matrix_nested, reduce_chain_completion,
                         reduce_chain_editing, reduce_hampath)
from .solvers import (Quadrangulation, SearchStats, approx_solve,
                      chordal_vertex_deletion_exact, cos_r_exact,
                      count_ternary_trees, enumerate_quadrangulations,
                      solve_22, solve_restricted_sc1p_1e, solve_restricted_sc1s,
                      solve_sc1p_0e, solve_sc1s_c, solve_sc1s_r, solve_sc1s_rc)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix", "BipartiteGraph", "Certificate", "CertificateError",
    "FIXED_KINDS", "FlipSourceError", "ForbiddenHit", "ForbiddenPattern",
    "Graph", "GraphFormatError", "Hole", "MatrixClass", "MatrixFormatError",
    "OracleGuardError", "ProblemKind", "Quadrangulation", "SearchStats",
    "UnknownLabelError", "VerifyResult", "WeightedMatrix", "Witness",
    "apply_certificate", "approx_solve", "brute_hamiltonian_path", "brute_sc1p",
    "c1p_rows", "check_witness", "chordal_vertex_deletion_exact", "classify",
    "connected_components", "cos_r_exact", "count_ternary_trees",
    "dedupe_weighted", "enumerate_quadrangulations", "find_fixed_forbidden",
    "find_forbidden", "find_hole", "find_induced_4cycle", "find_min_MIk",
    "gen_instance", "half_adjacency", "has_sc1p", "is_chain_matrix",
    "is_chain_matrix_nested", "is_chordal_bipartite", "matches_configuration",
    "oracle", "reduce_chain_completion", "reduce_chain_editing",
    "reduce_hampath", "representing_graph", "rule2_contract_4cycle",
    "rule3_prune", "solve_22", "solve_restricted_sc1p_1e",
    "solve_restricted_sc1s", "solve_sc1p_0e", "solve_sc1s_c", "solve_sc1s_r",
    "solve_sc1s_rc", "template_rows", "verify_certificate",
]
