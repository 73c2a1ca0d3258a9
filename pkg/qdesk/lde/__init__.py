from .problem import LdeProblem, load_problem
from .coefficients import TaylorCoefficients, taylor_coeffs
from .encoding import EncodingGates, build_encoding, complete_unitary
from .circuit import build_circuit, evolution_blocks, lde_layout
from .oracles import classical_exact, classical_taylor, truncation_bound
from .diffusion import ScalingPoint, ScalingResult, diffusion_matrix, fit_exponent, success_scaling
from .runner import LdeResult, LdeRunner, run
from .checks import fidelity_within, problem_runs_as_circuit
