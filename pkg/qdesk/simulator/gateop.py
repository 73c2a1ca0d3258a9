from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import attr
import numpy as np

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import is_unitary


class CostRule(Enum):
    GENERIC = "generic"
    FOURIER = "fourier"
    ORACLE = "oracle"


class GateKind(Enum):
    SINGLE = "single"
    CONTROLLED = "controlled"
    BLOCK = "block"
    CONTROLLED_BLOCK = "controlled_block"
    FOURIER = "fourier"


def _as_matrix(value) -> np.ndarray:
    return np.array(value, dtype=complex)


def _as_tuple(value) -> Tuple[int, ...]:
    return tuple(int(v) for v in value)


@attr.s(frozen=True, eq=False)
class GateOp(object):
    """
    A unitary on `targets`, applied where every control qubit holds its control value.
    The matrix index is little-endian over `targets` (targets[0] is its least significant bit).
    """

    matrix: np.ndarray = attr.ib(converter=_as_matrix)
    targets: Tuple[int, ...] = attr.ib(converter=_as_tuple)
    controls: Tuple[int, ...] = attr.ib(default=(), converter=_as_tuple)
    control_values: Tuple[int, ...] = attr.ib(default=None)
    label: str = attr.ib(default="U")
    stage: str = attr.ib(default="main")
    register: Optional[str] = attr.ib(default=None)
    rule: CostRule = attr.ib(default=CostRule.GENERIC)

    def __attrs_post_init__(self):
        if self.control_values is None:
            object.__setattr__(self, "control_values", tuple(1 for _ in self.controls))
        else:
            object.__setattr__(self, "control_values", _as_tuple(self.control_values))

    @property
    def width(self) -> int:
        return len(self.targets)

    @property
    def num_controls(self) -> int:
        return len(self.controls)

    @property
    def kind(self) -> GateKind:
        if self.rule is CostRule.FOURIER:
            return GateKind.FOURIER
        if self.register is None and self.width == 1:
            return GateKind.CONTROLLED if self.controls else GateKind.SINGLE
        return GateKind.CONTROLLED_BLOCK if self.controls else GateKind.BLOCK

    def validate(self, total_qubits: Optional[int] = None, tol: float = 1e-10) -> None:
        """
        Raises InvalidInputError when the op cannot be applied.
        :param total_qubits: Qubit count of the target layout, or None to skip the range check
        :param tol: Max-entry tolerance of the unitarity check
        :return: None
        """
        dim = 2 ** self.width
        if self.width < 1:
            raise InvalidInputError(f"Gate {self.label} has no target qubits")
        if self.matrix.shape != (dim, dim):
            raise InvalidInputError(
                f"Gate {self.label} matrix shape {self.matrix.shape} does not fit {self.width} targets"
            )
        if len(set(self.targets)) != len(self.targets) or len(set(self.controls)) != len(self.controls):
            raise InvalidInputError(f"Gate {self.label} repeats a qubit index")
        overlap = set(self.targets) & set(self.controls)
        if overlap:
            raise InvalidInputError(f"Gate {self.label} control/target overlap: {overlap}")
        if len(self.control_values) != len(self.controls) or any(v not in (0, 1) for v in self.control_values):
            raise InvalidInputError(f"Gate {self.label} control values must be bits, one per control")
        if total_qubits is not None:
            for q in self.targets + self.controls:
                if q < 0 or q >= total_qubits:
                    raise InvalidInputError(f"Gate {self.label} qubit {q} out of range 0..{total_qubits - 1}")
        if not is_unitary(self.matrix, tol=tol):
            raise InvalidInputError(f"Gate {self.label} matrix is not unitary within {tol}")

    def dagger(self) -> "GateOp":
        label = self.label[:-1] if self.label.endswith("†") else f"{self.label}†"
        return attr.evolve(self, matrix=self.matrix.conj().T, label=label)

    def with_controls(self, controls: Dict[int, int]) -> "GateOp":
        """
        Adds controls to the op, keeping its cost rule.
        :param controls: Map of control qubit to required bit value
        :return: New op with the extra controls placed first
        """
        extra = tuple(controls.keys())
        values = tuple(controls[q] for q in extra)
        return attr.evolve(self, controls=extra + self.controls, control_values=values + self.control_values)

    def remapped(self, mapping: Sequence[int], stage: Optional[str] = None, register: Optional[str] = None) -> "GateOp":
        return attr.evolve(
            self,
            targets=tuple(mapping[q] for q in self.targets),
            controls=tuple(mapping[q] for q in self.controls),
            stage=self.stage if stage is None else stage,
            register=self.register if register is None else register,
        )

    def to_json(self) -> Dict:
        return {
            "label": self.label,
            "kind": self.kind.value,
            "rule": self.rule.value,
            "stage": self.stage,
            "register": self.register,
            "targets": list(self.targets),
            "controls": list(self.controls),
            "control_values": list(self.control_values),
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data: Dict) -> "GateOp":
        matrix = [[complex(re, im) for re, im in row] for row in data["matrix"]]
        return cls(
            matrix=matrix,
            targets=data["targets"],
            controls=data.get("controls", ()),
            control_values=data.get("control_values"),
            label=data.get("label", "U"),
            stage=data.get("stage", "main"),
            register=data.get("register"),
            rule=CostRule(data.get("rule", CostRule.GENERIC.value)),
        )


def fourier_count(width: int) -> int:
    """
    Elementary gates of the textbook QFT on `width` qubits: Hadamards, controlled phases and final swaps.
    """
    return width * (width + 1) // 2 + width // 2


def elementary_cost(op: GateOp) -> int:
    """
    Decomposition cost of one op with unit constants.
      single-qubit: 1
      controlled^k single-qubit: k^2
      block on w qubits: 2^(w+1)
      controlled^k block: (k+w)^2 * 2^(w+1), collapsing to (k+1)^2 on a one-qubit register
      Fourier on w qubits: w(w+1)/2 + floor(w/2), times k^2 when controlled
      oracle block: max(k, 1) * w
    :param op: Gate op
    :return: Elementary gate count
    """
    k, w = op.num_controls, op.width
    if op.rule is CostRule.ORACLE:
        return max(k, 1) * w
    if op.rule is CostRule.FOURIER:
        return fourier_count(w) * max(k, 1) ** 2
    kind = op.kind
    if kind is GateKind.SINGLE:
        return 1
    if kind is GateKind.CONTROLLED:
        return k ** 2
    if kind is GateKind.BLOCK:
        return 2 ** (w + 1)
    if w == 1:
        return (k + 1) ** 2
    return (k + w) ** 2 * 2 ** (w + 1)
