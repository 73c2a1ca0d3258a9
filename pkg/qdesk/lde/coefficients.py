import math

import attr
import numpy as np

from qdesk.lde.problem import LdeProblem
from qdesk.shared.errors import CoefficientOverflowError
from qdesk.shared.log import get_logger

logger = get_logger("lde.coefficients")


def _as_array(value) -> np.ndarray:
    return np.array(value, dtype=float).ravel()


@attr.s(frozen=True, eq=False)
class TaylorCoefficients(object):
    """
    C holds C_0..C_k, D holds D_1..D_k. The bars are square roots of the plain coefficient sums.
    """

    C: np.ndarray = attr.ib(converter=_as_array)
    D: np.ndarray = attr.ib(converter=_as_array)

    @property
    def k(self) -> int:
        return self.C.shape[0] - 1

    @property
    def Cbar(self) -> float:
        return float(np.sqrt(np.sum(self.C)))

    @property
    def Dbar(self) -> float:
        return float(np.sqrt(np.sum(self.D)))

    @property
    def Nnorm(self) -> float:
        return float(np.sqrt(np.sum(self.C) + np.sum(self.D)))

    @property
    def padded_size(self) -> int:
        """
        Smallest power of two holding k+1 Taylor branches.
        """
        size = 1
        while size < self.k + 1:
            size *= 2
        return size

    @property
    def taylor_qubits(self) -> int:
        return self.padded_size.bit_length() - 1

    def to_json(self):
        return {
            "C": self.C.tolist(),
            "D": self.D.tolist(),
            "Cbar": self.Cbar,
            "Dbar": self.Dbar,
            "Nnorm": self.Nnorm,
        }


def _series(scale: float, first: float, order: int, start: int) -> np.ndarray:
    """
    first * scale^(j - start) / j! for j = start..order, built by recurrence.
    """
    values = []
    value = first / math.factorial(start)
    for j in range(start, order + 1):
        if j > start:
            value = value * scale / j
        if not math.isfinite(value):
            raise CoefficientOverflowError(f"Taylor coefficient of order {j} overflows for |M|t = {scale}")
        values.append(value)
    return np.array(values, dtype=float)


def taylor_coeffs(p: LdeProblem) -> TaylorCoefficients:
    """
    C_m = |x0| (|M|t)^m / m! and D_n = |b| (|M|t)^(n-1) t / n!.
    :param p: LDE problem
    :return: Coefficients for orders 0..k
    """
    scale = p.norm_M * p.t
    if not math.isfinite(scale):
        raise CoefficientOverflowError(f"|M|t is not finite: {scale}")
    x_norm = float(np.linalg.norm(p.x0))
    b_norm = float(np.linalg.norm(p.b))
    C = _series(scale, x_norm, p.k, 0)
    D = _series(scale, b_norm * p.t, p.k, 1) if p.k >= 1 else np.zeros(0)
    logger.debug(f"Taylor coefficients | k: {p.k} | |M|t: {scale} | C: {C.tolist()} | D: {D.tolist()}")
    return TaylorCoefficients(C=C, D=D)
