from qdesk.lde.problem import LdeProblem
from qdesk.shared.utils import Result


def problem_runs_as_circuit(p: LdeProblem, tol: float = 1e-10) -> Result[bool]:
    if p.k < 1:
        return Result(success=False, value=False, error="Circuit execution needs Taylor order k >= 1.")
    if not p.has_unitary_A(tol=tol):
        return Result(success=False, value=False, error="A = M/|M| is not unitary; only analysis operations apply.")
    return Result(success=True, value=True, error=None)


def fidelity_within(value: float, tol: float) -> Result[float]:
    if value >= 1.0 - tol:
        return Result(success=True, value=value, error=None)
    return Result(success=False, value=value, error=f"Fidelity {value} is below 1 - {tol}.")
