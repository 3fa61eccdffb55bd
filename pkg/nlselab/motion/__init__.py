from .scaling import ScalingEstimate, wiener_velocity_scaling
from .fractal_function import FractalFunctionParams, fractal_function_eval, scale_exponent, REGIMES
