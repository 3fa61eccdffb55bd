import numpy as np

from ..exceptions import InvalidArgument
from .wavefield import WaveField


def gaussian_packet(grid, center=None, width=1.0, q=0, amplitude=1.0):
    """ amplitude * exp(-(x - center)**2 / (2 width**2)) * exp(i k_q x) with periodic distance

    >>> from nlselab.field import make_grid
    >>> f = gaussian_packet(make_grid(20, 64), center=10, width=1)
    >>> abs(f.values[32] - 1) < 1e-15
    True
    """
    if width <= 0:
        raise InvalidArgument("packet width must be positive")
    if center is None:
        center = grid.length / 2
    y = grid.wrap(grid.x - center)
    values = amplitude * np.exp(-y ** 2 / (2.0 * width ** 2)) * np.exp(1j * grid.wavenumber(q) * grid.x)
    return WaveField(grid, values)


def periodic_packet(grid, concentration=1.0, twist=0.0, amplitude=1.0):
    """ Node-free periodic bump amplitude * exp(c cos(2 pi x/L) + i s sin(2 pi x/L)).

    Its phase has zero winding, so any real power of it is again periodic.
    """
    theta = 2.0 * np.pi * grid.x / grid.length
    return WaveField(grid, amplitude * np.exp(concentration * np.cos(theta) + 1j * twist * np.sin(theta)))


def random_field(grid, modes=4, seed=None, offset=0.0, scale=1.0):
    """ Band-limited random field with Fourier content |q| <= modes.

    With offset > scale the field has no nodes, since the sum of the mode
    amplitudes is normalized to scale.

    :param seed: seed or ``numpy.random.Generator``
    """
    if modes < 0 or modes > grid.max_admissible_q:
        raise InvalidArgument("modes must lie in [0, {}]".format(grid.max_admissible_q))
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    qs = np.arange(-modes, modes + 1)
    coeffs = rng.normal(size=qs.size) + 1j * rng.normal(size=qs.size)
    coeffs *= scale / np.sum(np.abs(coeffs))
    values = offset + np.exp(1j * np.outer(grid.x, grid.wavenumber(qs))) @ coeffs
    return WaveField(grid, values)
