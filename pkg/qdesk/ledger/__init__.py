from .term import (
    C_EPS,
    K,
    K2,
    K_LOGK1_LOGN,
    K_LOGK_LOGN,
    LOG2_N,
    LOG3_N,
    LOG_N,
    M2,
    N,
    N2,
    N4,
    N_LOG2_N,
    N_LOG_N,
    ONE,
    R_N_LOG2N,
    R_N_LOGN,
    S2_T_LOGN,
    SQRT_N,
    ComplexityTerm,
    Monomial,
    term,
)
from .algorithms import hhl_algo_term, lde_algo_term
