import numbers

import numpy as np

from ..exceptions import InvalidArgument, ShapeError
from ..utils import cached_property


class WaveField(object):
    """ Complex field sampled on a :class:`Grid1D`.

    The stored samples are the envelope A_j of psi_j = A_j exp(i kappa x_j).
    ``wavenumber`` (kappa) is 0 for ordinary periodic fields; a non-zero
    carrier represents plane waves with real or complex momentum exactly.

    >>> from nlselab.field import make_grid
    >>> f = WaveField(make_grid(6.283185307179586, 8), np.ones(8))
    >>> round(f.norm2, 12) == round(6.283185307179586, 12)
    True
    """

    def __init__(self, grid, values, wavenumber=0.0):
        values = np.array(values, dtype=np.complex128)
        if values.shape != (grid.n,):
            raise ShapeError("expected {} samples, got shape {}".format(grid.n, values.shape))
        if not np.all(np.isfinite(values)):
            raise InvalidArgument("field samples must be finite")
        values.flags.writeable = False
        #: grid the field is sampled on
        self.grid = grid
        #: envelope samples, read-only
        self.values = values
        #: carrier wavenumber kappa (complex)
        self.wavenumber = complex(wavenumber)

    @property
    def twisted(self):
        return self.wavenumber != 0

    @cached_property
    def carrier(self):
        return np.exp(1j * self.wavenumber * self.grid.x)

    @cached_property
    def samples(self):
        """ psi_j on the grid nodes including the carrier """
        if not self.twisted:
            return self.values.copy()
        return self.values * self.carrier

    @cached_property
    def norm2(self):
        from .calculus import inner_product
        return inner_product(self, self).real

    def max_abs(self):
        return float(np.max(np.abs(self.values)))

    def with_values(self, values):
        """ Field on the same grid with the same carrier """
        return WaveField(self.grid, values, self.wavenumber)

    def untwisted(self):
        """ Same field with the carrier folded into the samples """
        return WaveField(self.grid, self.samples)

    def _check_compatible(self, other):
        if self.grid != other.grid:
            raise ShapeError("fields live on different grids: {} and {}".format(self.grid, other.grid))
        if self.wavenumber != other.wavenumber:
            raise ShapeError("fields carry different carriers: {} and {}".format(self.wavenumber,
                                                                                 other.wavenumber))

    def __add__(self, other):
        self._check_compatible(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other):
        self._check_compatible(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return self.with_values(-self.values)

    def __repr__(self):
        return "<WaveField:n={},kappa={},max={:.6g}>".format(self.grid.n, self.wavenumber, self.max_abs())
