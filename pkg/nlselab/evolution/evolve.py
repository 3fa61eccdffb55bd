import logging

import numpy as np

from ..constants import DEFAULT_CFL, BLOWUP_FACTOR
from ..exceptions import BlowUpError, InvalidArgument, NumericalFailure
from .diagnostics import diagnose
from .integrators import check_stability, step_rk4, step_split

integrators = {'rk4': step_rk4, 'split-step': step_split}


class EvolveConfig(object):
    """ Time stepping parameters

    >>> EvolveConfig(0.01, 100, record_every=10).duration
    1.0
    """

    def __init__(self, dt, n_steps, record_every=1, integrator='rk4', cfl=DEFAULT_CFL,
                 blowup_factor=BLOWUP_FACTOR, keep_fields=False):
        if not dt > 0:
            raise InvalidArgument("dt must be positive, got {}".format(dt))
        if int(n_steps) != n_steps or n_steps < 1:
            raise InvalidArgument("n_steps must be a positive integer, got {}".format(n_steps))
        if int(record_every) != record_every or record_every < 1:
            raise InvalidArgument("record_every must be a positive integer, got {}".format(record_every))
        if integrator not in integrators:
            raise InvalidArgument("unknown integrator {}".format(integrator))
        self.dt = float(dt)
        self.n_steps = int(n_steps)
        self.record_every = int(record_every)
        self.integrator = integrator
        self.cfl = float(cfl)
        self.blowup_factor = float(blowup_factor)
        #: attach the field to every record
        self.keep_fields = keep_fields

    @property
    def duration(self):
        return self.dt * self.n_steps


def evolve(spec, psi0, config):
    """ Integrates psi0 over config.n_steps steps.

    Records are taken at step 0, every record_every steps and at the final step.

    :return: (final field, list of :class:`DiagnosticsRecord`)
    """
    check_stability(spec, psi0.grid, config.dt, config.cfl)
    step = integrators[config.integrator]
    limit = config.blowup_factor * psi0.max_abs()
    dt = config.dt

    psi = psi0
    warned = False
    try:
        records = [diagnose(spec, psi, 0, 0.0, config.keep_fields)]
    except NumericalFailure as e:
        e.at(0, 0.0)
        raise
    norms = [psi.norm2]
    for n in range(1, config.n_steps + 1):
        t = n * dt
        try:
            psi = step(spec, psi, dt, config.cfl)
            if psi.max_abs() > limit:
                raise BlowUpError("|psi| exceeded {:.3g}".format(limit))
            record = None
            if n % config.record_every == 0 or n == config.n_steps:
                record = diagnose(spec, psi, n, t, config.keep_fields)
        except NumericalFailure as e:
            logging.debug("{} at step {} t={}".format(type(e).__name__, n, t))
            e.at(n, t)
            raise
        norms.append(psi.norm2)
        if record is not None:
            if record.floored and not warned:
                warned = True
                logging.warning("{} floored nodes at t={}".format(record.floored, t))
            records.append(record)

    norms = np.array(norms)
    if norms.size > 2:
        rates = np.gradient(norms, dt, edge_order=2)
    else:
        rates = np.gradient(norms, dt)
    for record in records:
        record.norm_rate_numeric = float(rates[record.step])
    logging.debug("evolved {} steps of {} with {}".format(config.n_steps, spec, config.integrator))
    return psi, records
