import math

import numpy as np

from .base import Model

variant_names = ('hydro-combined',)


class HydroModel(Model):
    """ Hydrostatic and kinematic pressure together.

    The kinematic part -(a hbar0**2/8m**2)(grad ln(psi/psi*))**2 psi is taken from
    the phase gradient: grad ln(psi/psi*) = 2i Im(grad psi / psi), which turns the
    term into +(a hbar0**2/2m**2)(grad theta)**2 psi.
    """

    variant_names = variant_names
    carrier_free = False

    def nonlinear(self, psi, d1, d2):
        spec = self.spec
        r1, mask = self.log_ratios(psi, d1)
        kinematic = spec.a * spec.hbar0 ** 2 / (2 * spec.m ** 2) * np.imag(r1) ** 2 * psi
        logarithmic, log_mask = self.log_term(psi)
        return kinematic + logarithmic, mask | log_mask

    def density(self, psi, conj, d1, d2, potential=None):
        parts, _ = self.action_parts(psi, d1, d2, potential)
        logarithmic, _ = self.log_term(psi)
        kinematic = parts['nonlinear'] - logarithmic
        return conj * (parts['kinetic'] + parts['potential'] + kinematic) + self.log_density(psi, conj)

    def plane_wave_energy(self, p, amplitude=1.0):
        spec = self.spec
        return p ** 2 / (2 * spec.m) * (1 + spec.a / spec.m) - spec.b * math.log(abs(amplitude) ** 2)


model_class = HydroModel
