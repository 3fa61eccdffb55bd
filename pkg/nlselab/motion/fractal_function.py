import numpy as np

from ..constants import SCALE_DEPENDENT_RATIO, SCALE_INDEPENDENT_RATIO
from ..exceptions import InvalidArgument

REGIMES = ('scale-dependent', 'crossover', 'scale-independent')


class FractalFunctionParams(object):
    """ f(x, eps) = f0(x) (1 + zeta(x) (scale/eps)**(-b_rg))

    f0 and zeta are constants or callables of x.
    """

    def __init__(self, f0=1.0, zeta=1.0, scale=1.0, b_rg=-1.0):
        if not scale > 0:
            raise InvalidArgument("transition scale must be positive, got {}".format(scale))
        if not b_rg < 0:
            raise InvalidArgument("scale exponent b_rg must be negative, got {}".format(b_rg))
        self.f0 = f0
        self.zeta = zeta
        #: transition (de Broglie) scale
        self.scale = float(scale)
        self.b_rg = float(b_rg)

    def __repr__(self):
        return "<FractalFunctionParams:scale={},b_rg={}>".format(self.scale, self.b_rg)


def _term(term, x):
    if callable(term):
        return np.asarray(term(x))
    return np.full(np.shape(x), term, dtype=float)


def fractal_function_eval(x_samples, epsilon, params):
    """ Values of the fractal function at resolution epsilon and its regime.

    The regime is scale-dependent when |zeta (scale/eps)**(-b_rg)| > 10 at every sample,
    scale-independent when it is < 0.1 at every sample, and crossover otherwise.

    >>> values, regime = fractal_function_eval(np.zeros(2), 1.0, FractalFunctionParams())
    >>> values.tolist(), regime
    ([2.0, 2.0], 'crossover')
    """
    if not epsilon > 0:
        raise InvalidArgument("resolution must be positive, got {}".format(epsilon))
    x = np.asarray(x_samples, dtype=float)
    correction = _term(params.zeta, x) * (params.scale / epsilon) ** (-params.b_rg)
    values = _term(params.f0, x) * (1 + correction)
    size = np.abs(correction)
    if np.all(size > SCALE_DEPENDENT_RATIO):
        regime = 'scale-dependent'
    elif np.all(size < SCALE_INDEPENDENT_RATIO):
        regime = 'scale-independent'
    else:
        regime = 'crossover'
    return values, regime


def scale_exponent(params, epsilons, x=0.0):
    """ Slope of ln|f| against ln(scale/eps), equal to -b_rg deep in the scale-dependent regime """
    epsilons = np.asarray(epsilons, dtype=float)
    if epsilons.size < 2:
        raise InvalidArgument("need at least two resolutions")
    values = np.array([fractal_function_eval(np.array([x]), eps, params)[0][0] for eps in epsilons])
    return float(np.polyfit(np.log(params.scale / epsilons), np.log(np.abs(values)), 1)[0])
