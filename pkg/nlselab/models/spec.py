import numpy as np

from ..constants import DEFAULT_FLOOR, VARIANTS
from ..exceptions import InvalidArgument, ShapeError


class ModelSpec(object):
    """ NLSE variant plus its physical parameters. Parameters irrelevant to the variant are ignored.

    >>> s = ModelSpec('fractal', alpha=1.0, beta=0.25)
    >>> s.hbar_eff
    (1+0.25j)
    >>> ModelSpec('linear', hbar0=2.0).hbar_eff
    (2+0j)
    >>> ModelSpec('quadratic')
    Traceback (most recent call last):
    ...
    nlselab.exceptions.InvalidArgument: unknown model variant 'quadratic'
    """

    #: constructor arguments in echo order
    parameters = ('variant', 'm', 'hbar0', 'alpha', 'beta', 'a', 'b', 'g', 'hbar_second', 'sign', 'floor',
                  'scheme', 'potential')

    def __init__(self, variant, m=1.0, hbar0=1.0, alpha=None, beta=0.0, a=0.0, b=0.0, g=0.0,
                 hbar_second=None, sign=-1, floor=DEFAULT_FLOOR, scheme='spectral', potential=None):
        if variant not in VARIANTS:
            raise InvalidArgument("unknown model variant '{}'".format(variant))
        if not m > 0:
            raise InvalidArgument("mass must be positive, got {}".format(m))
        if not hbar0 > 0:
            raise InvalidArgument("hbar0 must be positive, got {}".format(hbar0))
        alpha = hbar0 if alpha is None else alpha
        if variant == 'fractal' and not alpha > 0:
            raise InvalidArgument("alpha must be positive, got {}".format(alpha))
        hbar_second = hbar0 if hbar_second is None else hbar_second
        if variant == 'nabla2log' and not hbar_second > 0:
            raise InvalidArgument("hbar_second must be positive, got {}".format(hbar_second))
        if sign not in (1, -1):
            raise InvalidArgument("sign must be +1 or -1, got {}".format(sign))
        if not floor > 0:
            raise InvalidArgument("floor must be positive, got {}".format(floor))
        if scheme not in ('spectral', 'central-2'):
            raise InvalidArgument("unknown differentiation scheme {}".format(scheme))
        if potential is not None:
            potential = np.array(potential, dtype=float)
            if potential.ndim != 1 or not np.all(np.isfinite(potential)):
                raise InvalidArgument("potential must be a finite 1-D array of real samples")
            potential.flags.writeable = False

        self.variant = variant
        #: mass
        self.m = float(m)
        #: real Planck constant
        self.hbar0 = float(hbar0)
        #: real part of the complex Planck constant (fractal)
        self.alpha = float(alpha)
        #: imaginary part of the complex Planck constant (fractal)
        self.beta = float(beta)
        #: kinematic mass-energy parameter
        self.a = float(a)
        #: logarithmic mass-energy parameter
        self.b = float(b)
        #: cubic coupling
        self.g = float(g)
        #: second real constant 2mD of the nabla2log variant
        self.hbar_second = float(hbar_second)
        #: side of the nabla2log correction
        self.sign = int(sign)
        #: relative amplitude floor for ln and division by psi
        self.floor = float(floor)
        #: differentiation scheme used by the models
        self.scheme = scheme
        #: external potential samples or None
        self.potential = potential

    @property
    def hbar_eff(self):
        """ constant of i hbar_eff psi_t = H psi """
        if self.variant == 'fractal':
            return complex(self.alpha, self.beta)
        return complex(self.hbar0)

    @property
    def hbar_lin(self):
        """ kinetic coefficient: psi_t = (i hbar_lin / 2m) psi'' + ... """
        if self.variant == 'fractal':
            return self.alpha
        return self.hbar0

    @property
    def hbar_stiff(self):
        """ largest effective coefficient of psi'' in psi_t, used by the stability guard """
        if self.variant == 'nabla2log':
            return max(self.hbar0, self.hbar_second, abs(2 * self.hbar0 - self.hbar_second))
        return self.hbar_lin

    def potential_on(self, n):
        """ potential samples for n nodes, or None """
        if self.potential is None:
            return None
        if self.potential.shape != (n,):
            raise ShapeError("potential has {} samples, grid has {}".format(self.potential.size, n))
        return self.potential

    def replace(self, **kwargs):
        params = self.as_dict(arrays=True)
        params.update(kwargs)
        return ModelSpec(**params)

    def as_dict(self, arrays=False):
        res = dict((name, getattr(self, name)) for name in self.parameters)
        if not arrays and self.potential is not None:
            res['potential'] = self.potential.tolist()
        return res

    def __eq__(self, other):
        if not isinstance(other, ModelSpec):
            return False
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted((k, str(v)) for k, v in self.as_dict().items())))

    def __repr__(self):
        return "<ModelSpec:{}>".format(self.variant)
