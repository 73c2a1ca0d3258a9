import json
import math
import os
from typing import Dict, List, Optional

import attr
import numpy as np
from schema import And, Optional as SchemaOptional, Or, Schema, SchemaError, Use

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.tomography.checks import plan_is_valid

logger = get_logger("tomography.planner")

LOGARITHMS = {"natural": math.log, "binary": math.log2, "decimal": math.log10}


def _as_probs(value) -> np.ndarray:
    return np.array(value, dtype=float).ravel()


@attr.s(frozen=True, eq=False)
class TomographyPlan(object):
    """
    Estimate every outcome probability p_m to relative precision delta with confidence 1 - epsilon.
    """

    delta: float = attr.ib(converter=float)
    epsilon: float = attr.ib(converter=float)
    probs: np.ndarray = attr.ib(converter=_as_probs)

    def __attrs_post_init__(self):
        check = plan_is_valid(self.delta, self.epsilon, self.probs)
        if not check.success:
            raise InvalidInputError(check.error)

    @classmethod
    def uniform(cls, delta: float, epsilon: float, size: int, p: float = 1.0) -> "TomographyPlan":
        """
        N equally likely outcomes sharing total probability p, i.e. p_m = p / N.
        """
        if size < 1:
            raise InvalidInputError(f"N must be positive, got {size}")
        return cls(delta=delta, epsilon=epsilon, probs=np.full(size, p / size))

    @property
    def size(self) -> int:
        return self.probs.shape[0]

    @property
    def total(self) -> float:
        return float(np.sum(self.probs))

    @property
    def weights(self) -> np.ndarray:
        """
        beta_m^2 = p_m / sum(p).
        """
        return self.probs / self.total

    @property
    def is_uniform(self) -> bool:
        return bool(np.allclose(self.probs, self.probs[0], rtol=1e-12, atol=0))

    def to_json(self) -> Dict:
        return {"delta": self.delta, "epsilon": self.epsilon, "probs": self.probs.tolist()}

    @classmethod
    def from_json(cls, data: Dict) -> "TomographyPlan":
        try:
            clean = PLAN_SCHEMA.validate(data)
        except SchemaError as e:
            raise InvalidInputError(f"Invalid tomography plan: {e}")
        if "uniform_n" in clean:
            return cls.uniform(clean["delta"], clean["epsilon"], clean["uniform_n"], clean.get("p", 1.0))
        if "probs" not in clean:
            raise InvalidInputError("A tomography plan needs probs or uniform_n")
        return cls(delta=clean["delta"], epsilon=clean["epsilon"], probs=clean["probs"])


PLAN_SCHEMA = Schema(
    {
        "delta": Use(float),
        "epsilon": Use(float),
        SchemaOptional("probs"): [Use(float)],
        SchemaOptional("uniform_n"): And(int, lambda v: v >= 1),
        SchemaOptional("p"): And(Use(float), lambda v: 0 < v <= 1),
        SchemaOptional("comment"): Or(str, None),
    }
)


def load_plan(path: str) -> TomographyPlan:
    if not os.path.isfile(path):
        raise InvalidInputError(f"Plan file not found: {path}")
    with open(path, "r", encoding="UTF-8") as fh:
        try:
            data = json.load(fh)
        except ValueError as e:
            raise InvalidInputError(f"Plan file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise InvalidInputError(f"Plan file must hold an object: {path}")
    return TomographyPlan.from_json(data)


def chernoff_constant(delta: float, epsilon: float, settings: Optional[Settings] = None) -> float:
    """
    C(delta, epsilon) = 3 / delta^2 * log(1 / epsilon). Independent of the system size.
    """
    settings = resolve(settings)
    log = LOGARITHMS.get(settings.chernoff_log)
    if log is None:
        raise InvalidInputError(f"Unknown logarithm {settings.chernoff_log!r}")
    return 3.0 / delta ** 2 * -log(epsilon)


def _ceil(value: float) -> int:
    # strip float noise such as 3.0000000000000004 before rounding up
    return int(math.ceil(round(value, 9)))


@attr.s(frozen=True, eq=False)
class SampleBudget(object):
    plan: TomographyPlan = attr.ib()
    constant: float = attr.ib()
    raw: np.ndarray = attr.ib()
    budgets: List[int] = attr.ib()
    uniform_copies: Optional[int] = attr.ib(default=None)

    @property
    def max_budget(self) -> int:
        return max(self.budgets)

    def to_json(self) -> Dict:
        return {
            "plan": self.plan.to_json(),
            "constant": self.constant,
            "budgets": list(self.budgets),
            "max_budget": self.max_budget,
            "uniform_copies": self.uniform_copies,
        }


def sample_bound(plan: TomographyPlan, settings: Optional[Settings] = None) -> SampleBudget:
    """
    Minimal integer budgets M_m >= C(delta, epsilon) / p_m.
    :param plan: Tomography plan
    :param settings: Selects the logarithm of C(delta, epsilon)
    :return: SampleBudget; for uniform plans it also carries ceil(N C / p)
    """
    constant = chernoff_constant(plan.delta, plan.epsilon, settings=settings)
    raw = constant / plan.probs
    budgets = [_ceil(v) for v in raw]
    uniform = None
    if plan.is_uniform:
        uniform = _ceil(plan.size * constant / plan.total)
    logger.debug(f"Sample budgets | Delta: {plan.delta} | Epsilon: {plan.epsilon} | Max: {max(budgets)}")
    return SampleBudget(plan=plan, constant=constant, raw=raw, budgets=budgets, uniform_copies=uniform)


def copies_bound(p: float, size: int, delta: float, epsilon: float, settings: Optional[Settings] = None) -> float:
    """
    Copies of the output state needed to read N uniform amplitudes when the algorithm succeeds with
    probability p: M = N C(delta, epsilon) / p.
    """
    if p <= 0:
        raise InvalidInputError(f"Success probability must be positive, got {p}")
    return size * chernoff_constant(delta, epsilon, settings=settings) / p
