"""Fibonomial calculus and cobweb posets with exact chain counting."""

from ._core import (
    DEFAULT_ENUMERATION_LIMIT,
    DEFAULT_ZETA_CAP,
    CobwebPoset,
    DenseCapExceeded,
    GuardRefusal,
    IncidenceMatrix,
    VerificationFailure,
    VerificationReport,
    Vertex,
    build_cobweb,
    chains_from_root,
    count_from_root_formula,
    count_layer_chains_formula,
    enumerate_from_root,
    enumerate_layer_chains,
    falling_f_factorial,
    fib,
    fib_factorial,
    fibonomial,
    fibonomial_factorial_ratio,
    fibonomial_row,
    hasse_dot,
    induced_copy_count,
    obs3_quotient,
    parse_csv,
    poset_from_zeta,
    run_cli,
    staircase_check,
    verify_observation,
    zeta_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
