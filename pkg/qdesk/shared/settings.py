import os
from typing import Any, Dict, Optional

import attr
import toml
import yaml
from schema import And, Optional as SchemaOptional, Or, Schema, SchemaError, Use

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger

logger = get_logger("settings")


@attr.s(frozen=True)
class Settings(object):
    """
    Toolkit-wide tolerances and defaults. Every field has a registered default;
    settings files only override what they name.
    """

    unitary_tol: float = attr.ib(default=1e-10)
    norm_tol: float = attr.ib(default=1e-12)
    herald_floor: float = attr.ib(default=1e-300)
    log_base: int = attr.ib(default=2)
    chernoff_log: str = attr.ib(default="natural")
    default_seed: int = attr.ib(default=0)
    hhl_snap_spectrum: bool = attr.ib(default=False)
    lde_scaling_t: float = attr.ib(default=0.1)

    SCHEMA = Schema(
        {
            SchemaOptional("unitary_tol"): And(Use(float), lambda v: v > 0),
            SchemaOptional("norm_tol"): And(Use(float), lambda v: v > 0),
            SchemaOptional("herald_floor"): And(Use(float), lambda v: v >= 0),
            SchemaOptional("log_base"): And(int, lambda v: v >= 2),
            SchemaOptional("chernoff_log"): Or("natural", "binary", "decimal"),
            SchemaOptional("default_seed"): And(int, lambda v: v >= 0),
            SchemaOptional("hhl_snap_spectrum"): bool,
            SchemaOptional("lde_scaling_t"): And(Use(float), lambda v: v > 0),
        }
    )

    def merged(self, overrides: Dict[str, Any]) -> "Settings":
        """
        Validates the overrides and returns a new Settings with them applied.
        :param overrides: Map of setting name to value
        :return: New Settings instance
        """
        try:
            clean = self.SCHEMA.validate(dict(overrides))
        except SchemaError as e:
            raise InvalidInputError(f"Invalid settings: {e}")
        return attr.evolve(self, **clean)

    @classmethod
    def from_file(cls, path: str) -> "Settings":
        """
        Loads a YAML (.yml/.yaml) or TOML (.toml) settings file over the defaults.
        :param path: Path to the settings file
        :return: Settings with the file's values applied
        """
        if not os.path.isfile(path):
            raise InvalidInputError(f"Settings file not found: {path}")
        _, ext = os.path.splitext(path)
        with open(path, "r", encoding="UTF-8") as fh:
            if ext.lower() in (".yml", ".yaml"):
                data = yaml.safe_load(fh) or {}
            elif ext.lower() == ".toml":
                data = toml.load(fh)
            else:
                raise InvalidInputError(f"Unsupported settings format: {ext}")
        if not isinstance(data, dict):
            raise InvalidInputError(f"Settings file must hold a mapping: {path}")
        logger.info(f"Loaded settings file: {path} | Keys: {sorted(data)}")
        return cls().merged(data)

    def as_dict(self) -> Dict[str, Any]:
        return attr.asdict(self)


DEFAULT_SETTINGS = Settings()


def resolve(settings: Optional[Settings]) -> Settings:
    return DEFAULT_SETTINGS if settings is None else settings
