from .problem import HhlProblem, default_t0, load_problem, snap_spectrum
from .circuit import (
    build_hhl_circuit,
    conditioned_evolution_blocks,
    evolution_power,
    hhl_layout,
    phase_estimation_circuit,
    rotation_angle,
    rotation_values,
)
from .runner import (
    HhlResult,
    HhlRunner,
    classical_solution,
    clock_readout,
    herald_probability,
    hhl_gate_complexity,
    run_hhl,
)
