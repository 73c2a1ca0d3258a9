import json
import os
from typing import Dict

import attr
import numpy as np
from schema import And, Optional as SchemaOptional, Schema, SchemaError, Use

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import is_power_of_two, is_unitary, log2_int
from qdesk.stateprep.target import parse_vector


def _as_matrix(value) -> np.ndarray:
    return np.array(value, dtype=complex)


def _as_vector(value) -> np.ndarray:
    return np.array(value, dtype=complex).ravel()


@attr.s(frozen=True, eq=False)
class LdeProblem(object):
    """
    dx/dt = M x + b with x(0) = x0, solved up to time t with a Taylor expansion of order k.
    """

    M: np.ndarray = attr.ib(converter=_as_matrix)
    b: np.ndarray = attr.ib(converter=_as_vector)
    x0: np.ndarray = attr.ib(converter=_as_vector)
    t: float = attr.ib(converter=float)
    k: int = attr.ib(converter=int)

    def __attrs_post_init__(self):
        if self.M.ndim != 2 or self.M.shape[0] != self.M.shape[1]:
            raise InvalidInputError(f"M must be square, got shape {self.M.shape}")
        size = self.M.shape[0]
        if size < 2 or not is_power_of_two(size):
            raise InvalidInputError(f"N must be a power of two >= 2, got {size}")
        for name in ("b", "x0"):
            if getattr(self, name).shape != (size,):
                raise InvalidInputError(f"{name} must have length {size}, got {getattr(self, name).shape[0]}")
        if not np.all(np.isfinite(self.M)):
            raise InvalidInputError("M holds non-finite entries")
        if self.norm_M <= 0:
            raise InvalidInputError("M must have positive spectral norm")
        if self.t <= 0:
            raise InvalidInputError(f"t must be positive, got {self.t}")
        if self.k < 0:
            raise InvalidInputError(f"Taylor order must be non-negative, got {self.k}")
        if np.linalg.norm(self.x0) == 0 and np.linalg.norm(self.b) == 0:
            raise InvalidInputError("x0 and b cannot both be zero")

    @property
    def size(self) -> int:
        return self.M.shape[0]

    @property
    def num_qubits(self) -> int:
        return log2_int(self.size)

    @property
    def norm_M(self) -> float:
        return float(np.linalg.norm(self.M, 2))

    @property
    def A(self) -> np.ndarray:
        return self.M / self.norm_M

    def has_unitary_A(self, tol: float = 1e-10) -> bool:
        return is_unitary(self.A, tol=tol)

    def with_order(self, k: int) -> "LdeProblem":
        return attr.evolve(self, k=k)

    def to_json(self) -> Dict:
        return {
            "M": [[[float(z.real), float(z.imag)] for z in row] for row in self.M],
            "b": [[float(z.real), float(z.imag)] for z in self.b],
            "x0": [[float(z.real), float(z.imag)] for z in self.x0],
            "t": self.t,
            "k": self.k,
        }

    @classmethod
    def from_json(cls, data: Dict) -> "LdeProblem":
        try:
            clean = PROBLEM_SCHEMA.validate(data)
        except SchemaError as e:
            raise InvalidInputError(f"Invalid LDE problem: {e}")
        try:
            M = [parse_vector(row) for row in clean["M"]]
            b = parse_vector(clean["b"]) if "b" in clean else [0.0] * len(M)
            x0 = parse_vector(clean["x0"])
        except (TypeError, ValueError) as e:
            raise InvalidInputError(f"Invalid LDE problem entries: {e}")
        return cls(M=M, b=b, x0=x0, t=clean["t"], k=clean["k"])


PROBLEM_SCHEMA = Schema(
    {
        "M": And(list, len),
        SchemaOptional("b"): list,
        "x0": And(list, len),
        "t": And(Use(float), lambda v: v > 0),
        "k": And(int, lambda v: v >= 0),
    },
    ignore_extra_keys=True,
)


def load_problem(path: str) -> LdeProblem:
    if not os.path.isfile(path):
        raise InvalidInputError(f"Problem file not found: {path}")
    with open(path, "r", encoding="UTF-8") as fh:
        try:
            data = json.load(fh)
        except ValueError as e:
            raise InvalidInputError(f"Problem file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise InvalidInputError(f"Problem file must hold an object: {path}")
    return LdeProblem.from_json(data)
