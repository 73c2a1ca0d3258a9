import csv
import json
import os
from typing import List

import attr
import numpy as np

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import is_power_of_two, log2_int


def _as_amplitudes(value) -> np.ndarray:
    return np.array(value, dtype=complex).ravel()


@attr.s(frozen=True, eq=False)
class TargetState(object):
    """
    Amplitudes c_i of sum_i c_i |i> to prepare from |0...0>.
    """

    amplitudes: np.ndarray = attr.ib(converter=_as_amplitudes)
    tol: float = attr.ib(default=1e-10)

    def __attrs_post_init__(self):
        size = self.amplitudes.shape[0]
        if not is_power_of_two(size):
            raise InvalidInputError(f"Target length {size} is not a power of two")
        norm = np.linalg.norm(self.amplitudes)
        if norm == 0:
            raise InvalidInputError("Target is the zero vector")
        if abs(norm - 1.0) > self.tol:
            raise InvalidInputError(f"Target is not normalized: norm {norm}")

    @classmethod
    def normalized(cls, vector) -> "TargetState":
        vector = _as_amplitudes(vector)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise InvalidInputError("Target is the zero vector")
        return cls(amplitudes=vector / norm)

    @property
    def size(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def num_qubits(self) -> int:
        return log2_int(self.size)

    @property
    def is_real_nonnegative(self) -> bool:
        return bool(np.all(np.abs(self.amplitudes.imag) == 0) and np.all(self.amplitudes.real >= 0))


def load_target_csv(path: str) -> TargetState:
    """
    Reads `index,re,im` rows. Missing indices are zero amplitudes.
    :param path: CSV file path, header row optional
    :return: Target state
    """
    if not os.path.isfile(path):
        raise InvalidInputError(f"Target file not found: {path}")
    entries = {}
    with open(path, "r", encoding="UTF-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().lower() == "index":
                continue
            try:
                index, re, im = int(row[0]), float(row[1]), float(row[2]) if len(row) > 2 else 0.0
            except (ValueError, IndexError) as e:
                raise InvalidInputError(f"Bad target row {row}: {e}")
            entries[index] = complex(re, im)
    if not entries:
        raise InvalidInputError(f"Target file holds no amplitudes: {path}")
    size = 1
    while size <= max(entries):
        size *= 2
    vector = np.zeros(max(size, 2), dtype=complex)
    for index, value in entries.items():
        vector[index] = value
    return TargetState(amplitudes=vector)


def parse_vector(data) -> List[complex]:
    """
    Accepts plain numbers or [re, im] pairs.
    """
    out = []
    for item in data:
        if isinstance(item, (list, tuple)):
            if len(item) != 2:
                raise InvalidInputError(f"Complex entries must be [re, im] pairs, got {item}")
            out.append(complex(float(item[0]), float(item[1])))
        else:
            out.append(complex(float(item)))
    return out


def load_target_json(path: str) -> TargetState:
    if not os.path.isfile(path):
        raise InvalidInputError(f"Target file not found: {path}")
    with open(path, "r", encoding="UTF-8") as fh:
        try:
            data = json.load(fh)
        except ValueError as e:
            raise InvalidInputError(f"Target file is not valid JSON: {e}")
    if isinstance(data, dict):
        data = data.get("amplitudes", [])
    return TargetState(amplitudes=parse_vector(data))
