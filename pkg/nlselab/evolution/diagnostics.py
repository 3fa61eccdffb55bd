import numpy as np

from ..field.calculus import inner_product
from ..models.operations import time_derivative, hamiltonian_density


class DiagnosticsRecord(object):
    """ Observables of one recorded time sample """

    #: column order of :meth:`as_row`
    columns = ('step', 't', 'norm2', 'energy_qm_re', 'energy_qm_im', 'energy_ft_re', 'energy_ft_im',
               'norm_rate_numeric', 'norm_rate_analytic', 'phase', 'floored')

    def __init__(self, step, t, norm2, energy_qm, energy_ft, norm_rate_analytic, phase, floored,
                 norm_rate_numeric=None, field=None):
        self.step = step
        self.t = t
        self.norm2 = norm2
        self.energy_qm = energy_qm
        self.energy_ft = energy_ft
        #: 2 Re <psi, dpsi/dt>
        self.norm_rate_analytic = norm_rate_analytic
        #: central difference of the per-step norm
        self.norm_rate_numeric = norm_rate_numeric
        #: phase of psi at node 0
        self.phase = phase
        #: count of floored nodes
        self.floored = floored
        #: the field itself when the run keeps snapshots
        self.field = field

    def as_row(self):
        return (self.step, self.t, self.norm2, self.energy_qm.real, self.energy_qm.imag, self.energy_ft.real,
                self.energy_ft.imag, self.norm_rate_numeric, self.norm_rate_analytic, self.phase, self.floored)

    def __repr__(self):
        return "<DiagnosticsRecord:t={:.6g},norm2={:.12g}>".format(self.t, self.norm2)


def diagnose(spec, psi, step, t, keep_field=False):
    out = time_derivative(spec, psi)
    energy_ft = complex(np.sum(hamiltonian_density(spec, psi)) * psi.grid.dx)
    return DiagnosticsRecord(step=step, t=t,
                             norm2=psi.norm2,
                             energy_qm=inner_product(psi, out.h_action),
                             energy_ft=energy_ft,
                             norm_rate_analytic=2 * inner_product(psi, out.dpsi_dt).real,
                             phase=float(np.angle(psi.samples[0])),
                             floored=out.floored,
                             field=psi if keep_field else None)


def norm_rate_check(spec, psi):
    """ d(norm**2)/dt = 2 Re <psi, dpsi/dt> and its split over the parts of H psi.

    Hermitian parts with a real Planck constant contribute zero. For the fractal
    variant the 'nonlinear' entry is the source of the imaginary potential iW.

    :return: (rate, dict of kinetic, potential and nonlinear contributions)
    """
    out = time_derivative(spec, psi)
    rate = 2 * inner_product(psi, out.dpsi_dt).real
    parts = dict((name, 2 * inner_product(psi, psi.with_values(values / (1j * spec.hbar_eff))).real)
                 for name, values in out.parts.items())
    return rate, parts
