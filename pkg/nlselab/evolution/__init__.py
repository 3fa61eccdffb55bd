from .integrators import stability_limit, check_stability, step_rk4, step_split
from .diagnostics import DiagnosticsRecord, norm_rate_check
from .evolve import EvolveConfig, evolve
