from .grid import Grid1D, make_grid
from .wavefield import WaveField
from .calculus import SCHEMES, gradient, laplacian, log_gradient, inner_product, wavenumber_norm2, \
    twisted_derivatives, floored, log_derivative, log_modulus
from .builders import gaussian_packet, periodic_packet, random_field
