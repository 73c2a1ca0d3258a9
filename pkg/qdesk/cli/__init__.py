from .base import main
from . import lde, hhl, tomo, complexity, prepbench  # noqa: F401  registers the subcommands
