import numpy as np
from scipy import fft

from ..constants import DEFAULT_CFL
from ..exceptions import BlowUpError, StabilityError, InvalidArgument
from ..field.wavefield import WaveField
from ..models.operations import get_model, time_derivative


def stability_limit(spec, grid, cfl=DEFAULT_CFL):
    """ largest dt allowed by dt <= cfl * (2m / hbar_stiff) * dx**2

    >>> from nlselab.field import make_grid
    >>> from nlselab.models import ModelSpec
    >>> stability_limit(ModelSpec('linear'), make_grid(8, 64), cfl=0.5)
    0.015625
    """
    return cfl * 2 * spec.m / spec.hbar_stiff * grid.dx ** 2


def check_stability(spec, grid, dt, cfl=DEFAULT_CFL):
    if not dt > 0:
        raise InvalidArgument("time step must be positive, got {}".format(dt))
    limit = stability_limit(spec, grid, cfl)
    if dt > limit:
        raise StabilityError("dt={} exceeds the stability limit {:.6g} (cfl={})".format(dt, limit, cfl))


def _field(psi, values, what):
    if not np.all(np.isfinite(values)):
        raise BlowUpError("non-finite values in {}".format(what))
    return WaveField(psi.grid, values, psi.wavenumber)


def _rate(spec, psi):
    return time_derivative(spec, psi).dpsi_dt.values


def step_rk4(spec, psi, dt, cfl=DEFAULT_CFL):
    """ One classical 4th order Runge-Kutta step of psi_t = time_derivative(psi) """
    check_stability(spec, psi.grid, dt, cfl)
    return _rk4(lambda f: _rate(spec, f), psi, dt)


def _rk4(rate, psi, dt):
    a = psi.values
    k1 = rate(psi)
    k2 = rate(_field(psi, a + 0.5 * dt * k1, "rk4 stage 2"))
    k3 = rate(_field(psi, a + 0.5 * dt * k2, "rk4 stage 3"))
    k4 = rate(_field(psi, a + dt * k3, "rk4 stage 4"))
    return _field(psi, a + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4), "rk4 update")


def linear_symbol(spec, psi):
    """ Fourier symbol of the kinetic part of psi_t, carrier included """
    grid = psi.grid
    kappa = psi.wavenumber
    k2 = grid.wavenumbers ** 2 + 2 * kappa * grid.odd_wavenumbers + kappa ** 2
    return -1j * spec.hbar_lin / (2 * spec.m) * k2


def _nonlinear_rate(spec, model, psi):
    d1, d2 = psi.grid.derivatives(psi.values, psi.wavenumber, spec.scheme)
    parts, _ = model.action_parts(psi.values, d1, d2, spec.potential_on(psi.grid.n))
    return (parts['potential'] + parts['nonlinear']) / (1j * spec.hbar_eff)


def step_split(spec, psi, dt, cfl=DEFAULT_CFL):
    """ Strang splitting: exact kinetic half steps in wavenumber space around
        an rk4 step of the potential and nonlinear parts. """
    check_stability(spec, psi.grid, dt, cfl)
    if spec.scheme != 'spectral':
        raise InvalidArgument("split-step needs the spectral scheme")
    model = get_model(spec)
    half = np.exp(linear_symbol(spec, psi) * dt / 2)

    def kinetic_half(f, what):
        return _field(f, fft.ifft(half * fft.fft(f.values)), what)

    mid = kinetic_half(psi, "split first half step")
    mid = _rk4(lambda f: _nonlinear_rate(spec, model, f), mid, dt)
    return kinetic_half(mid, "split second half step")
