import cmath
import logging
import math

import numpy as np

from ..constants import LOG_BIRULA_AMPLITUDE
from ..exceptions import AliasingError, NotApplicable, NotASolutionError, InvalidArgument
from ..evolution import EvolveConfig, evolve, stability_limit
from ..field.wavefield import WaveField
from ..models.operations import get_model
from ..utils import relative_deviation

CONVENTIONS = ('complex', 'real')


def plane_wave(grid, q, amplitude=1.0):
    """ amplitude * exp(i 2 pi q x / L)

    >>> from nlselab.field import make_grid
    >>> plane_wave(make_grid(6.283185307179586, 16), 8)
    Traceback (most recent call last):
    ...
    nlselab.exceptions.AliasingError: plane wave q=8 is not representable on 16 nodes
    """
    if int(q) != q or abs(q) > grid.max_admissible_q:
        raise AliasingError("plane wave q={} is not representable on {} nodes".format(q, grid.n))
    return WaveField(grid, amplitude * np.exp(1j * grid.wavenumber(q) * grid.x))


def default_amplitude(spec):
    """ amplitude convention of the plane-wave relations """
    if spec.variant in ('log-birula', 'hydro-combined'):
        return LOG_BIRULA_AMPLITUDE
    return 1.0


def _constant_potential(spec):
    if spec.potential is None:
        return 0.0
    if np.ptp(spec.potential) != 0:
        raise NotApplicable("plane waves need a constant potential")
    return float(spec.potential[0])


def predicted_dispersion(spec, p, amplitude=None):
    """ Closed-form plane-wave energy E(p) of a variant.

    >>> from nlselab.models import ModelSpec
    >>> predicted_dispersion(ModelSpec('kinematic', a=0.5), 1.0)
    0.75
    >>> round(predicted_dispersion(ModelSpec('log-birula', b=0.1), 1.0), 7)
    0.6837877
    """
    if amplitude is None:
        amplitude = default_amplitude(spec)
    return get_model(spec).plane_wave_energy(p, amplitude) + _constant_potential(spec)


class DispersionResult(object):

    def __init__(self, k, p, energy_pred, energy_meas, growth_rate, frequency, shape_deviation, convention):
        #: grid wavenumber 2 pi q / L
        self.k = k
        #: momentum label
        self.p = p
        self.energy_pred = energy_pred
        #: i hbar lambda with psi(T)/psi(0) = exp(lambda T); hbar is hbar0 for the 'complex'
        #: convention and hbar_eff for 'real'
        self.energy_meas = energy_meas
        #: Re lambda
        self.growth_rate = growth_rate
        #: -Im lambda
        self.frequency = frequency
        self.shape_deviation = shape_deviation
        self.convention = convention

    @property
    def deviation(self):
        """ relative to E_pred, absolute when E_pred is zero """
        if self.energy_pred == 0:
            return float(abs(self.energy_meas))
        return relative_deviation(self.energy_meas, self.energy_pred)

    def as_dict(self):
        return {'k': self.k, 'p': self.p, 'E_pred': self.energy_pred, 'E_meas': self.energy_meas,
                'deviation': self.deviation, 'growth_rate': self.growth_rate, 'frequency': self.frequency,
                'shape_deviation': self.shape_deviation, 'convention': self.convention}

    def __repr__(self):
        return "<DispersionResult:k={},E={},deviation={:.3g}>".format(self.k, self.energy_meas, self.deviation)


def carrier(spec, k, convention='complex'):
    """ (momentum label p, carrier wavenumber, Planck constant of the measured energy) for grid wavenumber k

    With 'complex' p = hbar0 k and hbar_eff kappa**2 = p**2 / hbar0 is real, so the plane wave
    rotates at hbar0 omega = E without growth. 'real' evolves exp(i k x) with p = hbar_eff k.

    >>> from nlselab.models import ModelSpec
    >>> p, kappa, hbar = carrier(ModelSpec('fractal', alpha=1.0, beta=0.75), 1.0)
    >>> p, hbar
    (1.0, 1.0)
    >>> abs((1 + 0.75j) * kappa ** 2 - 1.0) < 1e-15
    True
    """
    if convention not in CONVENTIONS:
        raise InvalidArgument("unknown dispersion convention {}".format(convention))
    hbar = spec.hbar_eff
    if convention == 'complex':
        p = spec.hbar0 * k
        kappa = p / cmath.sqrt(hbar * spec.hbar0)
        return p, kappa, spec.hbar0
    p = hbar * k
    if p.imag == 0:
        p = p.real
    return p, k, hbar


def measure_dispersion(spec, grid, q, amplitude=None, dt=None, T=1.0, convention='complex',
                       integrator='rk4', shape_tol=1e-6):
    """ Evolves a plane wave and measures its energy from the complex rotation rate at node 0.

    The carrier follows :func:`carrier`. For the fractal variant the 'complex' convention is
    the plane wave with real energy and zero growth. Both conventions coincide for variants
    with a real Planck constant.
    """
    if int(q) != q or abs(q) > grid.max_admissible_q:
        raise AliasingError("plane wave q={} is not representable on {} nodes".format(q, grid.n))
    if amplitude is None:
        amplitude = default_amplitude(spec)
    k = grid.wavenumber(q)
    p, kappa, hbar = carrier(spec, k, convention)
    energy_pred = complex(predicted_dispersion(spec, p, amplitude))

    if dt is None:
        dt = 0.5 * stability_limit(spec, grid)
    n_steps = max(1, int(math.ceil(T / dt)))
    dt = T / n_steps
    # at most a quarter turn between records keeps the phase unwrapping unambiguous
    turn = abs(energy_pred / hbar) * dt
    record_every = max(1, min(n_steps, int((math.pi / 4) / turn))) if turn > 0 else n_steps

    psi0 = WaveField(grid, np.full(grid.n, amplitude, dtype=np.complex128), kappa)
    config = EvolveConfig(dt, n_steps, record_every=record_every, integrator=integrator, keep_fields=True)
    final, records = evolve(spec, psi0, config)

    ratios = np.array([r.field.values[0] / psi0.values[0] for r in records])
    phase = np.unwrap(np.angle(ratios))
    rate = complex(math.log(abs(ratios[-1])), phase[-1]) / T

    expected = ratios[-1] * psi0.values
    shape_deviation = float(np.max(np.abs(final.values - expected)) / np.max(np.abs(expected)))
    if shape_deviation > shape_tol:
        raise NotASolutionError("plane wave q={} lost its shape: deviation {:.3g}".format(q, shape_deviation))
    result = DispersionResult(k=k, p=p, energy_pred=energy_pred, energy_meas=complex(1j * hbar * rate),
                              growth_rate=rate.real, frequency=-rate.imag, shape_deviation=shape_deviation,
                              convention=convention)
    logging.debug("dispersion {}: {}".format(spec.variant, result))
    return result
