import math

from .base import Model

variant_names = ('log-birula',)


class LogarithmicModel(Model):
    """ Linear equation plus the hydrostatic term -b ln(psi* psi) psi.

    The field-theory density carries the extra +b psi* psi, so the two
    energy functionals differ by b times the norm.
    """

    variant_names = variant_names
    carrier_free = False

    def nonlinear(self, psi, d1, d2):
        return self.log_term(psi)

    def density(self, psi, conj, d1, d2, potential=None):
        parts, _ = self.action_parts(psi, d1, d2, potential)
        return conj * (parts['kinetic'] + parts['potential']) + self.log_density(psi, conj)

    def plane_wave_energy(self, p, amplitude=1.0):
        return p ** 2 / (2 * self.spec.m) - self.spec.b * math.log(abs(amplitude) ** 2)


model_class = LogarithmicModel
