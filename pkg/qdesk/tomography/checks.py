import numpy as np

from qdesk.shared.utils import Result

PROBABILITY_SLACK = 1e-12


def plan_is_valid(delta: float, epsilon: float, probs: np.ndarray) -> Result[bool]:
    if not 0 < delta <= 1:
        return Result(success=False, value=False, error=f"Delta must lie in (0, 1], got {delta}.")
    if not 0 < epsilon < 1:
        return Result(success=False, value=False, error=f"Epsilon must lie in (0, 1), got {epsilon}.")
    if probs.size == 0:
        return Result(success=False, value=False, error="A plan needs at least one outcome probability.")
    if np.any(probs <= 0) or not np.all(np.isfinite(probs)):
        return Result(success=False, value=False, error="Every outcome probability must be positive.")
    if np.sum(probs) > 1 + PROBABILITY_SLACK:
        return Result(success=False, value=False, error=f"Probabilities sum to {np.sum(probs)} > 1.")
    return Result(success=True, value=True, error=None)


def enough_trials(trials: int, minimum: int) -> Result[bool]:
    if trials < minimum:
        return Result(success=False, value=False, error=f"Coverage needs at least {minimum} trials, got {trials}.")
    return Result(success=True, value=True, error=None)
