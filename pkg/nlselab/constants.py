import math

#: relative amplitude floor for ln and division by psi
DEFAULT_FLOOR = 1e-12

#: minimal number of grid nodes
MIN_NODES = 8

#: rk4 stability constant in dt <= c * (2m / hbar) * dx**2.
#: 2*sqrt(2)/pi**2 is the exact limit for the spectral Laplacian.
DEFAULT_CFL = 0.25
RK4_CFL_LIMIT = 2.0 * math.sqrt(2.0) / math.pi ** 2

#: abort evolution when max|psi| grows beyond this factor of the initial max
BLOWUP_FACTOR = 1e12

#: amplitude convention that reproduces E = p**2/2m + b ln(2 pi)
LOG_BIRULA_AMPLITUDE = 1.0 / math.sqrt(2.0 * math.pi)

#: Levenberg-Marquardt schedule
LM_INITIAL_DAMPING = 1e-3
LM_DAMPING_UP = 10.0
LM_DAMPING_DOWN = 10.0
LM_JACOBIAN_STEP = 1e-7

#: probe scale window of the Weinberg check
WEINBERG_PROBE_RANGE = (1e-8, 1e-4)

#: thresholds of the fractal function regimes
SCALE_DEPENDENT_RATIO = 10.0
SCALE_INDEPENDENT_RATIO = 0.1

#: output formatting
CSV_FLOAT_FORMAT = "{:.17g}"
OUTPUT_ENV = "NLSE_LAB_OUT"

VARIANTS = ('linear', 'log-birula', 'kinematic', 'hydro-combined', 'fractal', 'cubic-gp', 'nabla2log')
