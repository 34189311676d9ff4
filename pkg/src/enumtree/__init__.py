"""Divisor-pair trees of four integer quadratics over the free S/T matrix monoid.

The monoid of nonnegative 2x2 integer matrices with determinant 1 enumerates,
bijectively and compatibly with its two generators, the divisor pairs of
exactly four quadratics (up to sign): x^2 + 1, x^2 + x + 1, x^2 + 2x - 1 and
x^2 + 3x + 1.  This package provides exact tree generation, the inverse
algorithm back to generator words, the 2-regular second-component sequences,
divisor-count and primality views of tree fibers, row-sum analytics,
alternating prime-product representations, and a violation scanner for
arbitrary integer polynomials.
"""

from .analytics import (
    PrimeRepresentation,
    RowStats,
    prime_representation,
    primes_with_divisor,
    ratio_closed_form,
    roots_mod_p,
    row_stats_direct,
    row_stats_recursive,
)
from .classify import (
    LEFT,
    RIGHT,
    PolynomialVanishes,
    ViolationCertificate,
    check_condition,
    composite_witness,
    injectivity_surjectivity_report,
    scan_violations,
)
from .maps import (
    DEFAULT_NODE_BUDGET,
    InverseTrace,
    NodeBudgetExceeded,
    f_hat,
    f_hat_inverse,
    f_hat_via_action,
    phi_beta,
    psi_beta,
    relatives,
    tree_rows,
)
from .monoid import (
    GEN_S,
    GEN_T,
    IDENTITY,
    Mat2,
    complement,
    index_to_word,
    mat_mul,
    matrix_to_word,
    mirror_index,
    word_to_index,
    word_to_matrix,
)
from .pairs import (
    ENUMERABLE_POLYS,
    PHI0,
    PHI1,
    PHI3,
    POLY_BY_NAME,
    PSI2,
    DivisorPair,
    EnumerablePoly,
    Poly,
    c_bar,
    make_pair,
    pair_in_df,
    poly,
    poly_eval,
    s_bar,
    s_bar_inv,
    t_bar,
)
from .sseq import (
    L_MATRIX,
    R_MATRIX,
    SSeqKernel,
    kernel_for,
    net_expand,
    vector_tree_rows,
)

__version__ = "0.1.0"

__all__ = [
    "Mat2",
    "GEN_S",
    "GEN_T",
    "IDENTITY",
    "mat_mul",
    "complement",
    "word_to_matrix",
    "matrix_to_word",
    "word_to_index",
    "index_to_word",
    "mirror_index",
    "Poly",
    "poly",
    "poly_eval",
    "EnumerablePoly",
    "PHI0",
    "PHI1",
    "PSI2",
    "PHI3",
    "ENUMERABLE_POLYS",
    "POLY_BY_NAME",
    "DivisorPair",
    "make_pair",
    "pair_in_df",
    "s_bar",
    "c_bar",
    "t_bar",
    "s_bar_inv",
    "phi_beta",
    "psi_beta",
    "f_hat",
    "f_hat_via_action",
    "relatives",
    "InverseTrace",
    "f_hat_inverse",
    "tree_rows",
    "DEFAULT_NODE_BUDGET",
    "NodeBudgetExceeded",
    "SSeqKernel",
    "kernel_for",
    "L_MATRIX",
    "R_MATRIX",
    "vector_tree_rows",
    "net_expand",
    "LEFT",
    "RIGHT",
    "ViolationCertificate",
    "PolynomialVanishes",
    "check_condition",
    "scan_violations",
    "injectivity_surjectivity_report",
    "composite_witness",
    "RowStats",
    "row_stats_direct",
    "row_stats_recursive",
    "ratio_closed_form",
    "PrimeRepresentation",
    "prime_representation",
    "roots_mod_p",
    "primes_with_divisor",
]
