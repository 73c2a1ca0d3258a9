from typing import Dict, Iterable, List, Sequence, Tuple

import attr

from qdesk.shared.errors import InvalidInputError


def _freeze_registers(registers: Iterable[Sequence]) -> Tuple[Tuple[str, int], ...]:
    return tuple((str(name), int(width)) for name, width in registers)


@attr.s(frozen=True)
class RegisterLayout(object):
    """
    Ordered named registers. Qubit indices are handed out in declared order, so the first
    register owns qubit 0 (the least significant bit of a basis index).
    """

    registers: Tuple[Tuple[str, int], ...] = attr.ib(converter=_freeze_registers)

    def __attrs_post_init__(self):
        names = [name for name, _ in self.registers]
        if len(set(names)) != len(names):
            raise InvalidInputError(f"Register names must be unique: {names}")
        for name, width in self.registers:
            if width < 1:
                raise InvalidInputError(f"Register {name} must have at least one qubit, got {width}")
        if self.total_qubits < 1:
            raise InvalidInputError("A layout needs at least one qubit")

    @classmethod
    def of(cls, **widths: int) -> "RegisterLayout":
        return cls(registers=list(widths.items()))

    @property
    def total_qubits(self) -> int:
        return sum(width for _, width in self.registers)

    @property
    def dimension(self) -> int:
        return 2 ** self.total_qubits

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.registers]

    def _lookup(self) -> Dict[str, Tuple[int, int]]:
        offsets = {}
        offset = 0
        for name, width in self.registers:
            offsets[name] = (offset, width)
            offset += width
        return offsets

    def has(self, name: str) -> bool:
        return name in self.names

    def offset(self, name: str) -> int:
        return self._span(name)[0]

    def width(self, name: str) -> int:
        return self._span(name)[1]

    def qubits(self, name: str) -> Tuple[int, ...]:
        offset, width = self._span(name)
        return tuple(range(offset, offset + width))

    def _span(self, name: str) -> Tuple[int, int]:
        span = self._lookup().get(name)
        if span is None:
            raise InvalidInputError(f"Unknown register: {name} | Layout: {self.names}")
        return span

    def without(self, name: str) -> "RegisterLayout":
        """
        Layout left over once a register is measured out.
        :param name: Register to drop
        :return: Layout of the remaining registers, in declared order
        """
        self._span(name)
        remaining = [(n, w) for n, w in self.registers if n != name]
        if not remaining:
            raise InvalidInputError(f"Cannot remove {name}: it is the only register")
        return RegisterLayout(registers=remaining)

    def to_json(self) -> List[List]:
        return [[name, width] for name, width in self.registers]
