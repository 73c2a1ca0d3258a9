import numpy as np

from qdesk.shared.utils import Result

CONSTANT_SLACK = 1e-12


def is_hermitian(A: np.ndarray, tol: float = 1e-10) -> Result[bool]:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return Result(success=False, value=False, error=f"A must be square, got shape {A.shape}.")
    drift = float(np.max(np.abs(A - A.conj().T)))
    if drift > tol:
        return Result(success=False, value=False, error=f"A is not Hermitian: max |A - A^H| = {drift}.")
    return Result(success=True, value=True, error=None)


def spectrum_in_range(scaled: np.ndarray, m: int) -> Result[bool]:
    """
    Every scaled eigenvalue must fit the m-bit clock as a positive value below 2^m.
    """
    bad = [float(v) for v in scaled if not 0 < v < 2 ** m]
    if bad:
        return Result(success=False, value=False, error=f"Scaled eigenvalues {bad} lie outside (0, {2 ** m}).")
    return Result(success=True, value=True, error=None)


def rotation_constant_valid(constant: float, scaled: np.ndarray) -> Result[bool]:
    smallest = float(np.min(scaled))
    if constant <= 0:
        return Result(success=False, value=False, error=f"Rotation constant must be positive, got {constant}.")
    if constant > smallest + CONSTANT_SLACK:
        error = f"Rotation constant {constant} exceeds the smallest eigenvalue {smallest}."
        return Result(success=False, value=False, error=error)
    return Result(success=True, value=True, error=None)
