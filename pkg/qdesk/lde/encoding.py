from typing import Optional

import attr
import numpy as np

from qdesk.lde.coefficients import TaylorCoefficients
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import is_unitary


def complete_unitary(first_column: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Unitary whose first column is `first_column`; the other columns are seeded random vectors
    orthonormalized against it (Gram-Schmidt through a QR factorization).
    :param first_column: Unit vector
    :param rng: Generator supplying the completion columns
    :return: Square unitary matrix
    """
    first_column = np.asarray(first_column, dtype=complex)
    dim = first_column.shape[0]
    if abs(np.linalg.norm(first_column) - 1.0) > 1e-12:
        raise InvalidInputError(f"First column must be a unit vector, norm {np.linalg.norm(first_column)}")
    seed_columns = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    seed_columns[:, 0] = first_column
    q, r = np.linalg.qr(seed_columns)
    # QR fixes each column only up to a phase; rotate them so R has a positive diagonal
    diag = np.diag(r)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    q = q * phases[np.newaxis, :]
    q[:, 0] = first_column
    return q


@attr.s(frozen=True, eq=False)
class EncodingGates(object):
    V: np.ndarray = attr.ib()
    V_S1: np.ndarray = attr.ib()
    V_S2: np.ndarray = attr.ib()
    seed: int = attr.ib(default=0)

    @property
    def taylor_qubits(self) -> int:
        return self.V_S1.shape[0].bit_length() - 1

    def check(self, tol: float = 1e-10) -> None:
        for name in ("V", "V_S1", "V_S2"):
            if not is_unitary(getattr(self, name), tol=tol):
                raise InvalidInputError(f"Encoding gate {name} is not unitary within {tol}")


def build_encoding(tc: TaylorCoefficients, seed: int = 0, rng: Optional[np.random.Generator] = None) -> EncodingGates:
    """
    V rotates the branch qubit to (Cbar|0> + Dbar|1>)/Nnorm. V_S1 and V_S2 load the square roots of the
    C and D coefficients onto the Taylor register, padded with zeros to a power of two.
    :param tc: Taylor coefficients, k >= 1
    :param seed: Seed of the completion columns
    :param rng: Generator to use instead of one seeded from `seed`
    :return: Encoding gates
    """
    if tc.k < 1:
        raise InvalidInputError("The encoding needs Taylor order k >= 1")
    nnorm = tc.Nnorm
    if nnorm <= 0:
        raise InvalidInputError("Nnorm must be positive")
    rng = np.random.default_rng(seed) if rng is None else rng
    size = tc.padded_size
    cbar, dbar = tc.Cbar, tc.Dbar
    V = np.array([[cbar, -dbar], [dbar, cbar]], dtype=complex) / nnorm

    if cbar > 0:
        column = np.zeros(size, dtype=complex)
        column[: tc.k + 1] = np.sqrt(tc.C) / cbar
        V_S1 = complete_unitary(column, rng)
    else:
        V_S1 = np.eye(size, dtype=complex)

    if dbar > 0:
        column = np.zeros(size, dtype=complex)
        column[: tc.k] = np.sqrt(tc.D) / dbar
        V_S2 = complete_unitary(column, rng)
    else:
        V_S2 = np.eye(size, dtype=complex)

    return EncodingGates(V=V, V_S1=V_S1, V_S2=V_S2, seed=seed)
