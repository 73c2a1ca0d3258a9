from typing import Optional

from qdesk.ledger.term import K2, K_LOGK_LOGN, LOG_N, M2, S2_T_LOGN, ComplexityTerm
from qdesk.shared.errors import InvalidInputError


def lde_algo_term(k: Optional[int] = None, N: Optional[int] = None) -> ComplexityTerm:
    """
    Processing cost of the Taylor-series LDE solver: k^2 + log(N) + k*log(k)*log(N).
    The arguments only validate; evaluate the returned term to get a number.
    """
    if k is not None and k < 1:
        raise InvalidInputError(f"Taylor order must be positive, got {k}")
    if N is not None and N < 1:
        raise InvalidInputError(f"N must be positive, got {N}")
    return K2 + LOG_N + K_LOGK_LOGN


def hhl_algo_term(
    m: Optional[int] = None, s: Optional[float] = None, t: Optional[float] = None, N: Optional[int] = None
) -> ComplexityTerm:
    """
    Processing cost of HHL: m^2 + s^2*t*log(N) + log(N).
    With s = 0 the simulation summand is dropped.
    """
    if m is not None and m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")
    if s is not None and s < 0:
        raise InvalidInputError(f"Sparsity must be non-negative, got {s}")
    if s == 0:
        return M2 + LOG_N
    return M2 + S2_T_LOGN + LOG_N
