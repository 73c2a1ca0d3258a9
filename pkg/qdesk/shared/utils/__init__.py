from .result import Result
from .linalg import fidelity, is_power_of_two, is_unitary, log2_int, normalize
