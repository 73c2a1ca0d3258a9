from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import attr
import numpy as np

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.simulator import StateVector, sample
from qdesk.tomography.checks import enough_trials

logger = get_logger("tomography.coverage")

MIN_TRIALS = 100


def coverage_threshold(epsilon: float, trials: int) -> float:
    """
    1 - epsilon less a 3 sigma allowance for the finite number of trials.
    """
    return 1.0 - epsilon - 3.0 * np.sqrt(epsilon * (1.0 - epsilon) / trials)


@attr.s(frozen=True)
class CoverageReport(object):
    delta: float = attr.ib()
    epsilon: float = attr.ib()
    trials: int = attr.ib()
    seed: int = attr.ib()
    threshold: float = attr.ib()
    budgets: Dict[int, int] = attr.ib()
    coverage: Dict[int, float] = attr.ib()

    @property
    def failing(self) -> List[int]:
        return [m for m, value in sorted(self.coverage.items()) if value < self.threshold]

    @property
    def passed(self) -> bool:
        return not self.failing

    def rows(self) -> List[list]:
        return [
            [m, self.budgets[m], self.coverage[m], self.coverage[m] >= self.threshold]
            for m in sorted(self.coverage)
        ]

    def to_json(self) -> Dict:
        return {
            "delta": self.delta,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "seed": self.seed,
            "threshold": self.threshold,
            "passed": self.passed,
            "outcomes": [
                {"outcome": m, "budget": b, "coverage": c, "passed": ok} for m, b, c, ok in self.rows()
            ],
        }


def _trial_seeds(seed: int, trials: int, outcomes: int) -> List[List[int]]:
    """
    One private seed per (trial, outcome), derived so that serial and parallel runs draw identically.
    """
    seeds = []
    for child in np.random.SeedSequence(seed).spawn(trials):
        seeds.append([int(s.generate_state(1)[0]) for s in child.spawn(outcomes)])
    return seeds


def _run_trial(state: StateVector, budgets: Dict[int, int], probs: np.ndarray, delta: float, seeds: List[int]):
    hits = {}
    for (outcome, budget), seed in zip(sorted(budgets.items()), seeds):
        counts = sample(state, budget, seed)
        estimate = counts.get(outcome, 0) / budget
        hits[outcome] = abs(estimate - probs[outcome]) / probs[outcome] <= delta
    return hits


def verify_coverage(
    state: StateVector,
    budgets: Dict[int, int],
    delta: float,
    epsilon: float,
    trials: int = 200,
    seed: int = 0,
    workers: Optional[int] = None,
) -> CoverageReport:
    """
    Monte Carlo check of the budgets: in each trial outcome m is estimated as n_m / M_m from M_m fresh shots.
    :param state: State whose basis-outcome probabilities are estimated
    :param budgets: Map of basis index to its sample budget M_m
    :param delta: Relative precision
    :param epsilon: Allowed failure probability
    :param trials: Number of repetitions, at least 100
    :param seed: Root seed of the per-trial generators
    :param workers: Thread count for parallel trials, serial when None
    :return: CoverageReport with the fraction of trials within delta per outcome
    """
    check = enough_trials(trials, MIN_TRIALS)
    if not check.success:
        raise InvalidInputError(check.error)
    probs = state.probabilities()
    for outcome, budget in budgets.items():
        if outcome < 0 or outcome >= probs.shape[0]:
            raise InvalidInputError(f"Outcome {outcome} is not a basis index of the state")
        if probs[outcome] <= 0:
            raise InvalidInputError(f"Outcome {outcome} has zero probability")
        if budget < 1:
            raise InvalidInputError(f"Budget of outcome {outcome} must be positive, got {budget}")

    seeds = _trial_seeds(seed, trials, len(budgets))
    if workers:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _run_trial(state, budgets, probs, delta, s), seeds))
    else:
        results = [_run_trial(state, budgets, probs, delta, s) for s in seeds]

    coverage = {m: sum(1 for r in results if r[m]) / trials for m in sorted(budgets)}
    report = CoverageReport(
        delta=delta,
        epsilon=epsilon,
        trials=trials,
        seed=seed,
        threshold=coverage_threshold(epsilon, trials),
        budgets=dict(sorted(budgets.items())),
        coverage=coverage,
    )
    logger.info(f"Coverage run | Trials: {trials} | Outcomes: {len(budgets)} | Failing: {report.failing}")
    return report
