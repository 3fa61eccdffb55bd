import numpy as np

from .base import Model

variant_names = ('cubic-gp',)


class CubicModel(Model):
    """ Gross-Pitaevskii term g |psi|**2 psi, density (g/2)|psi|**4 """

    variant_names = variant_names
    carrier_free = False

    def nonlinear(self, psi, d1, d2):
        return self.spec.g * np.abs(psi) ** 2 * psi, np.zeros(psi.shape, dtype=bool)

    def density(self, psi, conj, d1, d2, potential=None):
        parts, _ = self.action_parts(psi, d1, d2, potential)
        return conj * (parts['kinetic'] + parts['potential']) + 0.5 * self.spec.g * (conj * psi) ** 2

    def plane_wave_energy(self, p, amplitude=1.0):
        return p ** 2 / (2 * self.spec.m) + self.spec.g * abs(amplitude) ** 2


model_class = CubicModel
