from .dispersion import plane_wave, predicted_dispersion, measure_dispersion, DispersionResult, default_amplitude, \
    carrier
from .functionals import energy_qm, energy_ft, weinberg_check, expected_energy_gap
from .linearization import unwrap_phase, linearization_map, linearization_residual, select_nabla2log_sign, \
    round_trip_error
