from typing import Any, Dict, List, Optional, Sequence

import attr

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.settings import Settings

FORMATS = ("json", "csv")


def parse_list(value: Optional[str], cast=int) -> List:
    """
    "8,16,32" -> [8, 16, 32]. Empty entries are rejected.
    """
    if value is None:
        return []
    items = [item.strip() for item in value.split(",")]
    if any(not item for item in items):
        raise InvalidInputError(f"Malformed list: {value!r}")
    try:
        return [cast(item) for item in items]
    except ValueError as e:
        raise InvalidInputError(f"Malformed list {value!r}: {e}")


@attr.s(frozen=True)
class RunConfig(object):
    """
    Everything a report needs to be reproduced. The seed is always explicit.
    """

    subcommand: str = attr.ib()
    out_dir: str = attr.ib()
    seed: int = attr.ib()
    settings: Settings = attr.ib(factory=Settings)
    problem: Optional[str] = attr.ib(default=None)
    demo: Optional[str] = attr.ib(default=None)
    formats: Sequence[str] = attr.ib(default=FORMATS, converter=tuple)
    sweep: Dict[str, List] = attr.ib(factory=dict)
    options: Dict[str, Any] = attr.ib(factory=dict)

    def __attrs_post_init__(self):
        unknown = set(self.formats) - set(FORMATS)
        if unknown or not self.formats:
            raise InvalidInputError(f"Output formats must be drawn from {FORMATS}, got {list(self.formats)}")
        for name, values in self.sweep.items():
            if not values:
                raise InvalidInputError(f"Sweep range {name} is empty")

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats

    def to_json(self) -> Dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "problem": self.problem,
            "demo": self.demo,
            "seed": self.seed,
            "formats": list(self.formats),
            "sweep": {k: list(v) for k, v in sorted(self.sweep.items())},
            "options": dict(sorted(self.options.items())),
            "settings": self.settings.as_dict(),
        }
