from .collocation import CollocationWindow, cheb_diff_matrix, levenberg_marquardt, LMResult
from .profile import SolitonProfile, envelope_residual, ansatz_residual, speed_residual, relative_residual
from .gausson import GaussonParams, gausson_solution, gausson_field, gausson_profile, fit_gausson
from .kinematic import kinematic_kappa, riccati_coefficients, riccati_profile, shoot_kinematic_profile, \
    imaginary_part_speed_check
from .fractal import fractal_profile, collocation_solve_fractal
