import logging
import math

import numpy as np
from scipy.optimize import least_squares

from ..exceptions import AliasingError, DomainTooSmallError, InvalidArgument, NotApplicable
from ..field.wavefield import WaveField
from .profile import SolitonProfile, envelope_residual, relative_residual

#: largest admissible Gaussian tail at the domain edges
TAIL_LIMIT = 1e-12

#: search interval of the width parameter
WIDTH_BOUNDS = (1e-6, 1e3)


class GaussonParams(object):
    """ psi = C exp(-(B/4)(x - Vt + d)**2) exp(i k x - i omega t)

    The constant e^{a/B} of the usual form is absorbed into the amplitude C.
    """

    def __init__(self, amplitude, width, offset=0.0, wavenumber=0.0, omega=0.0, speed=0.0):
        if not width > 0:
            raise InvalidArgument("gausson width parameter must be positive, got {}".format(width))
        #: C
        self.amplitude = amplitude
        #: B
        self.width = float(width)
        #: d
        self.offset = float(offset)
        #: k
        self.wavenumber = float(wavenumber)
        #: omega
        self.omega = float(omega)
        #: V = hbar0 k / m
        self.speed = float(speed)

    def as_dict(self):
        return {'amplitude': self.amplitude, 'width': self.width, 'offset': self.offset,
                'wavenumber': self.wavenumber, 'omega': self.omega, 'speed': self.speed}

    def __repr__(self):
        return "<GaussonParams:B={},omega={},k={}>".format(self.width, self.omega, self.wavenumber)


def _check_variant(spec):
    if spec.variant != 'log-birula':
        raise NotApplicable("gaussons solve the log-birula variant, not {}".format(spec.variant))


def gausson_frequency(spec, width, amplitude, wavenumber):
    """ omega that balances the constant terms for a given width B """
    hbar, m = spec.hbar0, spec.m
    return (hbar ** 2 * (width / 2 + wavenumber ** 2) / (2 * m) - spec.b * math.log(abs(amplitude) ** 2)) / hbar


def gausson_solution(spec, amplitude=1.0, wavenumber=0.0, offset=0.0):
    """ Closed-form gausson constants: B = 4 m b / hbar0**2, V = hbar0 k / m.

    >>> from nlselab.models import ModelSpec
    >>> p = gausson_solution(ModelSpec('log-birula', b=0.1))
    >>> round(p.width, 12), round(p.omega, 12)
    (0.4, 0.1)
    """
    _check_variant(spec)
    width = 4 * spec.m * spec.b / spec.hbar0 ** 2
    return GaussonParams(amplitude, width, offset, wavenumber, gausson_frequency(spec, width, amplitude, wavenumber),
                         spec.hbar0 * wavenumber / spec.m)


def _check_carrier(grid, k):
    q = k * grid.length / (2 * math.pi)
    if abs(q - round(q)) > 1e-9 or abs(round(q)) > grid.max_admissible_q:
        raise AliasingError("gausson carrier k={} is not a grid wavenumber".format(k))


def gausson_envelope(grid, params, t=0.0, check_tail=True):
    """ C exp(-(B/4) xi**2) with xi = x - Vt + d wrapped into the periodic cell """
    if check_tail:
        tail = math.exp(-params.width * grid.length ** 2 / 16)
        if tail >= TAIL_LIMIT:
            raise DomainTooSmallError("gausson tail {:.2e} at the domain edge exceeds {:g}".format(tail, TAIL_LIMIT))
    xi = grid.wrap(grid.x - params.speed * t + params.offset)
    return params.amplitude * np.exp(-params.width / 4 * xi ** 2)


def gausson_field(grid, params, t=0.0, check_tail=True):
    """ Samples the gausson at time t

    >>> from nlselab.field import make_grid
    >>> g = make_grid(16 * math.pi, 256)
    >>> f = gausson_field(g, GaussonParams(2.0, 0.4))
    >>> float(f.max_abs())
    2.0
    >>> gausson_field(make_grid(4.0, 16), GaussonParams(1.0, 0.4))
    Traceback (most recent call last):
    ...
    nlselab.exceptions.DomainTooSmallError: gausson tail 6.70e-01 at the domain edge exceeds 1e-12
    """
    _check_carrier(grid, params.wavenumber)
    envelope = gausson_envelope(grid, params, t, check_tail)
    return WaveField(grid, envelope * np.exp(1j * (params.wavenumber * grid.x - params.omega * t)))


def gausson_profile(spec, grid, params, check_tail=True):
    """ The gausson as a travelling profile: p = hbar0 k, E = hbar0 omega """
    _check_carrier(grid, params.wavenumber)
    envelope = gausson_envelope(grid, params, 0.0, check_tail)
    return SolitonProfile(grid, envelope.real, envelope.imag, p=spec.hbar0 * params.wavenumber,
                          E=spec.hbar0 * params.omega, V=params.speed, hbar_c=spec.hbar0)


def fit_gausson(spec, grid, amplitude=1.0, wavenumber=0.0, offset=0.0, tol=1e-8, max_iter=200, width_guess=1.0):
    """ Determines B and omega by least squares on the PDE residual of the Gaussian ansatz.

    The fit does not assume the width law; it only fixes V = hbar0 k / m from the carrier.

    :return: (GaussonParams, SolitonProfile with residual, converged flag and iterations)
    """
    _check_variant(spec)
    _check_carrier(grid, wavenumber)
    speed = spec.hbar0 * wavenumber / spec.m

    def params_of(z):
        return GaussonParams(amplitude, z[0], offset, wavenumber, z[1], speed)

    def residual(z):
        profile = gausson_profile(spec, grid, params_of(z), check_tail=False)
        res, _ = envelope_residual(spec, grid, profile.envelope, profile.p, profile.E, profile.V, profile.hbar_c)
        return np.concatenate([res.real, res.imag])

    z0 = [width_guess, gausson_frequency(spec, width_guess, amplitude, wavenumber)]
    low, high = WIDTH_BOUNDS
    fit = least_squares(residual, z0, bounds=([low, -np.inf], [high, np.inf]), xtol=1e-14, ftol=1e-14,
                        gtol=1e-14, max_nfev=max_iter)
    params = params_of(fit.x)

    at_bound = params.width <= low * (1 + 1e-6) or params.width >= high * (1 - 1e-6)
    tail_ok = math.exp(-params.width * grid.length ** 2 / 16) < TAIL_LIMIT
    profile = gausson_profile(spec, grid, params, check_tail=False)
    res, h = envelope_residual(spec, grid, profile.envelope, profile.p, profile.E, profile.V, profile.hbar_c)
    profile.residual = relative_residual(res, h)
    profile.iterations = int(fit.nfev)
    profile.converged = bool(fit.status > 0 and not at_bound and tail_ok and profile.residual <= tol)
    if not profile.converged:
        logging.warning("gausson fit did not converge: B={:.3g}, residual {:.3g}, tail ok {}".format(
            params.width, profile.residual, tail_ok))
    else:
        logging.debug("gausson fit: B={!r}, omega={!r} after {} evaluations".format(params.width, params.omega,
                                                                                  fit.nfev))
    return params, profile
