import logging
import math

import numpy as np

from ..constants import DEFAULT_FLOOR
from ..evolution import EvolveConfig, evolve, step_rk4
from ..exceptions import DegenerateFieldError, PhaseUnwrapError
from ..field.wavefield import WaveField
from ..models.operations import time_derivative
from ..utils import rms


def unwrap_phase(psi, max_jump=0.9 * math.pi, origin=None):
    """ Continuous phase along the grid, starting at node 0 and proceeding left to right.

    :param origin: representative of the node-0 phase is chosen closest to it
    :return: (phase samples, winding number)

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * math.pi, 32)
    >>> phase, winding = unwrap_phase(WaveField(g, np.exp(2j * g.x)))
    >>> winding, bool(np.allclose(phase, 2 * g.x))
    (2, True)
    """
    samples = psi.samples
    steps = np.angle(np.roll(samples, -1) / samples)
    worst = np.max(np.abs(steps))
    if worst >= max_jump:
        node = int(np.argmax(np.abs(steps)))
        raise PhaseUnwrapError("phase jump {:.3f} between nodes {} and {}".format(worst, node,
                                                                               (node + 1) % psi.grid.n))
    start = np.angle(samples[0])
    if origin is not None:
        start += 2 * math.pi * round((origin - start) / (2 * math.pi))
    phase = start + np.concatenate(([0.0], np.cumsum(steps[:-1])))
    winding = int(round(np.sum(steps) / (2 * math.pi)))
    return phase, winding


def linearization_map(psi, hbar0, hbar_second, floor=DEFAULT_FLOOR, origin=None):
    """ psi' = exp(i S / hbar_second) with S = hbar0 (phase - i ln|psi|), i.e. psi' = psi**(hbar0/hbar_second)
    on the unwrapped branch.

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * math.pi, 32)
    >>> mapped = linearization_map(WaveField(g, np.exp(2j * g.x)), 1.0, 2.0)
    >>> bool(np.allclose(mapped.values, np.exp(1j * g.x)))
    True
    """
    if psi.twisted:
        psi = psi.untwisted()
    modulus = np.abs(psi.values)
    if not modulus.max() > 0 or np.any(modulus < floor * modulus.max()):
        raise DegenerateFieldError("linearization map needs a node-free field")
    phase, winding = unwrap_phase(psi, origin=origin)
    ratio = hbar0 / hbar_second
    if abs(winding * ratio - round(winding * ratio)) > 1e-12:
        logging.warning("winding {} times {} is not an integer: mapped field is not periodic".format(winding, ratio))
    action = hbar0 * (phase - 1j * np.log(modulus))
    return WaveField(psi.grid, np.exp(1j * action / hbar_second))


def linearization_residual(spec, psi0, dt, T):
    """ Evolves psi0 under a nabla2log model up to T, maps five consecutive states with
    hbar0 -> hbar_second and measures how well they solve the linear equation with hbar_second.

    The time derivative of the mapped field uses the five-point central stencil.

    :return: rms |i hbar psi'_t - H psi'| / rms |H psi'|
    """
    n_before = max(0, int(round(T / dt)) - 2)
    if n_before:
        psi, _ = evolve(spec, psi0, EvolveConfig(dt, n_before, record_every=n_before))
    else:
        psi = psi0
    states = [psi]
    for _ in range(4):
        states.append(step_rk4(spec, states[-1], dt))

    origins = np.unwrap([np.angle(s.values[0]) for s in states])
    mapped = [linearization_map(s, spec.hbar0, spec.hbar_second, spec.floor, origin)
              for s, origin in zip(states, origins)]
    dpsi_dt = (-mapped[4].values + 8 * mapped[3].values - 8 * mapped[1].values + mapped[0].values) / (12 * dt)

    linear = spec.replace(variant='linear', hbar0=spec.hbar_second)
    h = time_derivative(linear, mapped[2]).h_action.values
    return rms(1j * spec.hbar_second * dpsi_dt - h) / rms(h)


def select_nabla2log_sign(spec, psi0, dt, T):
    """ Picks the side of the nabla2log correction for which the map linearizes the equation.

    :return: (sign, dict sign -> residual)
    """
    residuals = dict((sign, linearization_residual(spec.replace(sign=sign), psi0, dt, T)) for sign in (1, -1))
    sign = min(residuals, key=residuals.get)
    logging.info("nabla2log sign residuals: {}".format(residuals))
    return sign, residuals


def round_trip_error(psi, hbar0, hbar_second, floor=DEFAULT_FLOOR):
    """ max |map(map(psi, hbar0 -> hbar_second), hbar_second -> hbar0) - psi| / max |psi| """
    there = linearization_map(psi, hbar0, hbar_second, floor)
    origin = hbar0 / hbar_second * float(np.angle(psi.samples[0]))
    back = linearization_map(there, hbar_second, hbar0, floor, origin)
    return float(np.max(np.abs(back.samples - psi.samples)) / np.max(np.abs(psi.samples)))
