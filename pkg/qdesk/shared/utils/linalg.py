import numpy as np


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def log2_int(n: int) -> int:
    """
    Exact base-2 logarithm of a power of two.
    :param n: Power of two
    :return: Number of qubits needed to index `n` basis states
    """
    if not is_power_of_two(n):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


def is_unitary(matrix: np.ndarray, tol: float = 1e-10) -> bool:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    identity = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix.conj().T @ matrix - identity)) <= tol)


def normalize(vector: np.ndarray) -> np.ndarray:
    vector = np.asarray(vector, dtype=complex)
    norm = np.linalg.norm(vector)
    if norm == 0:
        raise ValueError("Cannot normalize the zero vector")
    return vector / norm


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """
    Global-phase-insensitive overlap |<a|b>|^2 of the normalized vectors.
    """
    a = normalize(np.ravel(a))
    b = normalize(np.ravel(b))
    return float(abs(np.vdot(a, b)) ** 2)
