import json
import os
from typing import Dict, Optional

import attr
import numpy as np
import scipy.linalg
from schema import And, Optional as SchemaOptional, Or, Schema, SchemaError, Use

from qdesk.hhl.checks import is_hermitian, rotation_constant_valid, spectrum_in_range
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.utils import is_power_of_two, log2_int, normalize
from qdesk.stateprep.target import parse_vector

logger = get_logger("hhl.problem")

EXACT_TOL = 1e-9
SINGULAR_TOL = 1e-12


def _as_matrix(value) -> np.ndarray:
    return np.array(value, dtype=complex)


def _as_vector(value) -> np.ndarray:
    return np.array(value, dtype=complex).ravel()


def default_t0(A: np.ndarray, m: int) -> float:
    """
    Evolution time placing the largest eigenvalue on the top clock value 2^m - 1.
    """
    largest = float(np.max(scipy.linalg.eigvalsh(A)))
    if largest <= 0:
        raise InvalidInputError("A needs a positive eigenvalue to pick t0")
    return 2 * np.pi * (2 ** m - 1) / largest


@attr.s(frozen=True, eq=False)
class HhlProblem(object):
    """
    Solve A x = b for Hermitian A with an m-bit eigenvalue clock.
    t0 defaults to default_t0 and C to the smallest scaled eigenvalue.
    """

    A: np.ndarray = attr.ib(converter=_as_matrix)
    b: np.ndarray = attr.ib(converter=_as_vector)
    m: int = attr.ib(converter=int)
    t0: Optional[float] = attr.ib(default=None)
    C: Optional[float] = attr.ib(default=None)

    def __attrs_post_init__(self):
        check = is_hermitian(self.A)
        if not check.success:
            raise InvalidInputError(check.error)
        size = self.A.shape[0]
        if size < 2 or not is_power_of_two(size):
            raise InvalidInputError(f"N must be a power of two >= 2, got {size}")
        if self.b.shape != (size,):
            raise InvalidInputError(f"b must have length {size}, got {self.b.shape[0]}")
        if np.linalg.norm(self.b) == 0:
            raise InvalidInputError("b cannot be the zero vector")
        if self.m < 1:
            raise InvalidInputError(f"m must be at least 1, got {self.m}")
        object.__setattr__(self, "b", normalize(self.b))
        A = (self.A + self.A.conj().T) / 2
        object.__setattr__(self, "A", A)
        if np.min(np.abs(scipy.linalg.eigvalsh(A))) < SINGULAR_TOL:
            raise InvalidInputError("A is singular")
        if self.t0 is None:
            object.__setattr__(self, "t0", default_t0(A, self.m))
        object.__setattr__(self, "t0", float(self.t0))
        if self.t0 <= 0:
            raise InvalidInputError(f"t0 must be positive, got {self.t0}")
        check = spectrum_in_range(self.scaled_eigenvalues, self.m)
        if not check.success:
            raise InvalidInputError(check.error)
        if self.C is None:
            object.__setattr__(self, "C", float(np.min(self.scaled_eigenvalues)))
        object.__setattr__(self, "C", float(self.C))
        check = rotation_constant_valid(self.C, self.scaled_eigenvalues)
        if not check.success:
            raise InvalidInputError(check.error)

    @property
    def size(self) -> int:
        return self.A.shape[0]

    @property
    def num_qubits(self) -> int:
        return log2_int(self.size)

    @property
    def clock_size(self) -> int:
        return 2 ** self.m

    def eigensystem(self):
        return scipy.linalg.eigh(self.A)

    @property
    def scaled_eigenvalues(self) -> np.ndarray:
        """
        lambda_j t0 / 2 pi, the values the clock register stores.
        """
        return scipy.linalg.eigvalsh(self.A) * self.t0 / (2 * np.pi)

    @property
    def is_exact(self) -> bool:
        scaled = self.scaled_eigenvalues
        return bool(np.all(np.abs(scaled - np.round(scaled)) <= EXACT_TOL))

    def with_precision(self, m: int) -> "HhlProblem":
        """
        Same system, t0 and C on a clock of m bits.
        """
        return HhlProblem(A=self.A, b=self.b, m=m, t0=self.t0, C=self.C)

    def to_json(self) -> Dict:
        return {
            "A": [[[float(z.real), float(z.imag)] for z in row] for row in self.A],
            "b": [[float(z.real), float(z.imag)] for z in self.b],
            "m": self.m,
            "t0": self.t0,
            "C": self.C,
        }

    @classmethod
    def from_json(cls, data: Dict) -> "HhlProblem":
        try:
            clean = PROBLEM_SCHEMA.validate(data)
        except SchemaError as e:
            raise InvalidInputError(f"Invalid HHL problem: {e}")
        A = [parse_vector(row) for row in clean["A"]]
        return cls(A=A, b=parse_vector(clean["b"]), m=clean["m"], t0=clean.get("t0"), C=clean.get("C"))


PROBLEM_SCHEMA = Schema(
    {
        "A": And(list, len),
        "b": And(list, len),
        "m": And(int, lambda v: v >= 1),
        SchemaOptional("t0"): Or(None, And(Use(float), lambda v: v > 0)),
        SchemaOptional("C"): Or(None, And(Use(float), lambda v: v > 0)),
    },
    ignore_extra_keys=True,
)


def load_problem(path: str) -> HhlProblem:
    if not os.path.isfile(path):
        raise InvalidInputError(f"Problem file not found: {path}")
    with open(path, "r", encoding="UTF-8") as fh:
        try:
            data = json.load(fh)
        except ValueError as e:
            raise InvalidInputError(f"Problem file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise InvalidInputError(f"Problem file must hold an object: {path}")
    return HhlProblem.from_json(data)


def snap_spectrum(p: HhlProblem) -> HhlProblem:
    """
    Rounds every scaled eigenvalue to the nearest clock value in [1, 2^m - 1] and rebuilds A on the same
    eigenvectors, so phase estimation is exact. C is clipped to the new smallest value.
    :param p: HHL problem
    :return: Problem with an exactly representable spectrum
    """
    values, vectors = p.eigensystem()
    scaled = np.clip(np.round(values * p.t0 / (2 * np.pi)), 1, p.clock_size - 1)
    snapped = vectors @ np.diag(scaled * 2 * np.pi / p.t0) @ vectors.conj().T
    logger.debug(f"Snapped spectrum | Before: {(values * p.t0 / (2 * np.pi)).tolist()} | After: {scaled.tolist()}")
    return HhlProblem(A=snapped, b=p.b, m=p.m, t0=p.t0, C=min(p.C, float(np.min(scaled))))
