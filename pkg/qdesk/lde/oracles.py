import math

import numpy as np
import scipy.linalg

from qdesk.lde.problem import LdeProblem

# condition number above which the closed form (e^{Mt} - I) M^-1 b is not trusted
SINGULAR_CONDITION = 1e12


def classical_taylor(p: LdeProblem) -> np.ndarray:
    """
    Order-k partial sums: sum_m (Mt)^m/m! x0 + sum_n M^(n-1) t^n/n! b.
    """
    x_term = p.x0.astype(complex)
    total = x_term.copy()
    for m in range(1, p.k + 1):
        x_term = p.M @ x_term * (p.t / m)
        total = total + x_term
    if p.k >= 1:
        b_term = p.b.astype(complex) * p.t
        total = total + b_term
        for n in range(2, p.k + 1):
            b_term = p.M @ b_term * (p.t / n)
            total = total + b_term
    return total


def _forcing_series(p: LdeProblem) -> np.ndarray:
    """
    sum_n M^(n-1) t^n/n! b, read off the exponential of the augmented matrix [[M, b], [0, 0]].
    """
    size = p.size
    augmented = np.zeros((size + 1, size + 1), dtype=complex)
    augmented[:size, :size] = p.M
    augmented[:size, size] = p.b
    return scipy.linalg.expm(augmented * p.t)[:size, size]


def classical_exact(p: LdeProblem) -> np.ndarray:
    """
    x(t) = e^{Mt} x0 + (e^{Mt} - I) M^-1 b. Singular or ill-conditioned M falls back to the series form
    of the forcing term, which needs no inverse.
    """
    propagator = scipy.linalg.expm(p.M * p.t)
    x = propagator @ p.x0
    if np.linalg.norm(p.b) == 0:
        return x
    if np.linalg.cond(p.M) < SINGULAR_CONDITION:
        return x + (propagator - np.eye(p.size)) @ np.linalg.solve(p.M, p.b)
    return x + _forcing_series(p)


def truncation_bound(p: LdeProblem) -> float:
    """
    Upper bound on |x_taylor - x_exact| for order k:
    |x0| a^(k+1)/(k+1)! e^a + |b| t a^k/(k+1)! e^a with a = |M|t.
    """
    a = p.norm_M * p.t
    tail = math.exp(a) / math.factorial(p.k + 1)
    return float(np.linalg.norm(p.x0) * a ** (p.k + 1) * tail + np.linalg.norm(p.b) * p.t * a ** p.k * tail)
