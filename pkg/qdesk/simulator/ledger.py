from typing import Dict

import attr

from qdesk.simulator.gateop import GateOp, elementary_cost


def _merge(a: Dict[str, int], b: Dict[str, int]) -> Dict[str, int]:
    merged = dict(a)
    for key, value in b.items():
        merged[key] = merged.get(key, 0) + value
    return merged


@attr.s(frozen=True)
class GateCountLedger(object):
    """
    Running tally of applied ops. `per_label` counts raw ops per label,
    `per_stage` sums elementary cost per circuit stage.
    """

    raw_ops: int = attr.ib(default=0)
    elementary_count: int = attr.ib(default=0)
    per_label: Dict[str, int] = attr.ib(factory=dict)
    per_stage: Dict[str, int] = attr.ib(factory=dict)

    def record(self, op: GateOp) -> "GateCountLedger":
        cost = elementary_cost(op)
        return GateCountLedger(
            raw_ops=self.raw_ops + 1,
            elementary_count=self.elementary_count + cost,
            per_label=_merge(self.per_label, {op.label: 1}),
            per_stage=_merge(self.per_stage, {op.stage: cost}),
        )

    def __add__(self, other: "GateCountLedger") -> "GateCountLedger":
        if not isinstance(other, GateCountLedger):
            return NotImplemented
        return GateCountLedger(
            raw_ops=self.raw_ops + other.raw_ops,
            elementary_count=self.elementary_count + other.elementary_count,
            per_label=_merge(self.per_label, other.per_label),
            per_stage=_merge(self.per_stage, other.per_stage),
        )

    def stage(self, name: str) -> int:
        return self.per_stage.get(name, 0)

    def to_json(self) -> Dict:
        return {
            "raw_ops": self.raw_ops,
            "elementary_count": self.elementary_count,
            "per_label": dict(sorted(self.per_label.items())),
            "per_stage": dict(sorted(self.per_stage.items())),
        }
