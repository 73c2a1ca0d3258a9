"""
Built-in problems with the values their runs must reproduce.
"""
from typing import Dict

import attr
import numpy as np

from qdesk.hhl import HhlProblem
from qdesk.lde import LdeProblem
from qdesk.simulator.gates import X


@attr.s(frozen=True)
class Expectation(object):
    min_fidelity: float = attr.ib()
    herald_prob: float = attr.ib(default=None)
    herald_tol: float = attr.ib(default=1e-9)
    slope_tol: float = attr.ib(default=0.15)


def pauli_x(k: int) -> LdeProblem:
    """
    dx/dt = 0.5 X x from x0 = (1, 0), solved to t = 1: x(1) = (cosh 0.5, sinh 0.5).
    """
    return LdeProblem(M=0.5 * X, b=np.zeros(2), x0=[1.0, 0.0], t=1.0, k=k)


def two_by_two() -> HhlProblem:
    """
    Eigenvalues 1/2 and 1/4 land on clock values 2 and 1; A^-1 b is proportional to (3, -1).
    """
    A = np.array([[3, 1], [1, 3]], dtype=float) / 8
    return HhlProblem(A=A, b=[1.0, 0.0], m=2, t0=8 * np.pi, C=1.0)


def identity(size: int = 4) -> HhlProblem:
    b = np.arange(1, size + 1, dtype=float)
    return HhlProblem(A=np.eye(size), b=b, m=2, t0=2 * np.pi, C=1.0)


LDE_DEMOS = ("pauli-x", "diffusion-scaling")

HHL_DEMOS = {
    "two-by-two": two_by_two,
    "identity": identity,
}

EXPECTATIONS: Dict[str, Expectation] = {
    "pauli-x": Expectation(min_fidelity=1 - 1e-8),
    "diffusion-scaling": Expectation(min_fidelity=0.0, slope_tol=0.15),
    "two-by-two": Expectation(min_fidelity=1 - 1e-9, herald_prob=0.625),
    "identity": Expectation(min_fidelity=1 - 1e-9, herald_prob=1.0),
}
