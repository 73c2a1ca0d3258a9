import math
from typing import List, Optional, Sequence

import attr
import numpy as np
import scipy.linalg
import scipy.sparse

from qdesk.lde.oracles import classical_taylor
from qdesk.lde.problem import LdeProblem
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.shared.utils import is_power_of_two
from qdesk.tomography.planner import copies_bound

logger = get_logger("lde.diffusion")

SOLUTIONS = ("exact", "taylor")


def diffusion_matrix(N: int) -> np.ndarray:
    """
    N^2 * tridiag(1, -2, 1), the finite-difference Laplacian on N interior points.
    """
    if N < 2:
        raise InvalidInputError(f"N must be at least 2, got {N}")
    ones = np.ones(N - 1)
    stencil = scipy.sparse.diags([ones, -2.0 * np.ones(N), ones], offsets=(-1, 0, 1))
    return (N ** 2) * stencil.toarray()


@attr.s(frozen=True)
class ScalingPoint(object):
    N: int = attr.ib()
    success_prob: float = attr.ib()
    copies: float = attr.ib()
    norm_M: float = attr.ib()

    def to_row(self):
        return [self.N, self.success_prob, self.copies, self.norm_M]


@attr.s(frozen=True)
class ScalingResult(object):
    k: int = attr.ib()
    t: float = attr.ib()
    solution: str = attr.ib()
    points: List[ScalingPoint] = attr.ib()

    @property
    def slope(self) -> float:
        return fit_exponent([p.N for p in self.points], [p.success_prob for p in self.points])

    @property
    def copies_exponent(self) -> float:
        return fit_exponent([p.N for p in self.points], [p.copies for p in self.points])

    def to_json(self):
        return {
            "k": self.k,
            "t": self.t,
            "solution": self.solution,
            "slope": self.slope if len(self.points) >= 2 else None,
            "copies_exponent": self.copies_exponent if len(self.points) >= 2 else None,
            "points": [attr.asdict(p) for p in self.points],
        }


def fit_exponent(xs: Sequence[float], ys: Sequence[float]) -> float:
    """
    Least-squares slope of log(y) against log(x).
    """
    if len(xs) < 2:
        raise InvalidInputError("A slope needs at least two points")
    return float(np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)[0])


def success_probability(N: int, k: int, t: float, solution: str = "exact") -> ScalingPoint:
    M = diffusion_matrix(N)
    x0 = np.ones(N)
    problem = LdeProblem(M=M, b=np.zeros(N), x0=x0, t=t, k=k)
    a = problem.norm_M * t
    # Nnorm^2 = sum_m C_m with C_m = |x0| a^m/m!
    nnorm_sq = float(np.linalg.norm(x0) * sum(a ** m / math.factorial(m) for m in range(k + 1)))
    if solution == "exact":
        x = scipy.linalg.expm(M * t) @ x0
    else:
        x = classical_taylor(problem)
    norm_sq = float(np.linalg.norm(x) ** 2)
    return ScalingPoint(N=N, success_prob=norm_sq / nnorm_sq ** 2, copies=0.0, norm_M=problem.norm_M)


def success_scaling(
    k: int,
    t: Optional[float] = None,
    Ns: Sequence[int] = (8, 16, 32, 64),
    solution: str = "exact",
    delta: float = 0.1,
    epsilon: float = 0.05,
    settings: Optional[Settings] = None,
) -> ScalingResult:
    """
    Success probability of the diffusion problem as N grows, computed classically.
    x0 is the all-ones vector and b = 0. The probability is |x(t)|^2 / Nnorm^4, and the tomography
    copies bound M(N) = N C(delta, epsilon) / p is reported alongside.
    The N^(-4k) law only shows once |M| t >> k. |M| is about 4N^2, so t defaults to lde_scaling_t = 0.1; at
    t = 1e-4 the fit over N <= 64 stays far from -4k. For the same reason the exact norm is the default: when
    |M| t >> k the truncated series overshoots |x(t)| by orders of magnitude.
    :param k: Taylor order, at least 1
    :param t: Evolution time, the configured lde_scaling_t when None
    :param Ns: Powers of two
    :param solution: "exact" uses |e^{Mt} x0|^2, "taylor" the truncated series
    :param delta: Relative precision of the copies bound
    :param epsilon: Failure probability of the copies bound
    :param settings: Supplies the default t
    :return: ScalingResult with the fitted slope
    """
    settings = resolve(settings)
    t = settings.lde_scaling_t if t is None else t
    if k < 1:
        raise InvalidInputError(f"Taylor order must be at least 1, got {k}")
    if solution not in SOLUTIONS:
        raise InvalidInputError(f"Unknown solution kind {solution!r}, expected one of {SOLUTIONS}")
    if not Ns:
        raise InvalidInputError("Need at least one N")
    points = []
    for size in Ns:
        if size < 2 or not is_power_of_two(size):
            raise InvalidInputError(f"N must be a power of two >= 2, got {size}")
        point = success_probability(size, k, t, solution=solution)
        copies = copies_bound(point.success_prob, size, delta, epsilon, settings=settings)
        point = attr.evolve(point, copies=copies)
        logger.debug(f"Diffusion point | N: {size} | k: {k} | p: {point.success_prob} | Copies: {copies}")
        points.append(point)
    result = ScalingResult(k=k, t=t, solution=solution, points=points)
    if len(points) >= 2:
        logger.info(f"Diffusion scaling | k: {k} | t: {t} | Slope: {result.slope}")
    return result
