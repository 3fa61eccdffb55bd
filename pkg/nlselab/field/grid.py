import math

import numpy as np
from scipy import fft

from ..constants import MIN_NODES
from ..exceptions import InvalidArgument
from ..utils import cached_property


class Grid1D(object):
    """ Periodic uniform grid on [0, L). The node x = L is identified with x = 0.

    >>> g = Grid1D(2 * math.pi, 8)
    >>> g.dx == math.pi / 4
    True
    >>> float(g.x[3]) == 3 * math.pi / 4
    True
    """

    def __init__(self, length, n):
        if not length > 0:
            raise InvalidArgument("grid length must be positive, got {}".format(length))
        if int(n) != n or n < MIN_NODES:
            raise InvalidArgument("grid needs n >= {} nodes, got {}".format(MIN_NODES, n))
        #: domain length L
        self.length = float(length)
        #: node count
        self.n = int(n)
        #: spacing L/n
        self.dx = self.length / self.n

    @cached_property
    def x(self):
        """ node coordinates x_j = j dx """
        return np.arange(self.n) * self.dx

    @cached_property
    def wavenumbers(self):
        """ angular wavenumbers in FFT order """
        return 2.0 * math.pi * fft.fftfreq(self.n, d=self.dx)

    @cached_property
    def odd_wavenumbers(self):
        """ wavenumbers for odd-order derivatives; the unpaired Nyquist mode is dropped """
        k = self.wavenumbers.copy()
        if self.n % 2 == 0:
            k[self.n // 2] = 0.0
        return k

    @property
    def max_admissible_q(self):
        return (self.n - 1) // 2 if self.n % 2 else self.n // 2 - 1

    def wavenumber(self, q):
        """ angular wavenumber 2 pi q / L of the q-th mode """
        return 2.0 * math.pi * q / self.length

    def wrap(self, y):
        """ Maps coordinates into [-L/2, L/2)

        >>> Grid1D(10, 8).wrap(np.array([4.0, 6.0, -6.0])).tolist()
        [4.0, -4.0, 4.0]
        """
        return (np.asarray(y) + self.length / 2) % self.length - self.length / 2

    def derivatives(self, values, wavenumber=0.0, scheme='spectral', first=None):
        from .calculus import twisted_derivatives
        return twisted_derivatives(self, values, wavenumber, scheme, first)

    def __eq__(self, other):
        return isinstance(other, Grid1D) and self.n == other.n and self.length == other.length

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.length, self.n))

    def __repr__(self):
        return "<Grid1D:L={},n={}>".format(self.length, self.n)


def make_grid(L, n):
    """ Builds a periodic grid

    >>> make_grid(10, 256).dx
    0.0390625
    >>> make_grid(1, 4)
    Traceback (most recent call last):
    ...
    nlselab.exceptions.InvalidArgument: grid needs n >= 8 nodes, got 4
    """
    return Grid1D(L, n)
