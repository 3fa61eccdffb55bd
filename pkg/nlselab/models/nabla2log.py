from .base import Model

variant_names = ('nabla2log',)


class Nabla2LogModel(Model):
    """ i hbar0 psi_t = -(hbar0**2/2m) psi'' + U psi + sign (hbar0/2m)(hbar - hbar0)(lap ln psi) psi

    lap ln psi = psi''/psi - (psi'/psi)**2. With sign = -1 the substitution
    psi' = psi**(hbar0/hbar) turns the equation into the linear one with hbar.
    """

    variant_names = variant_names

    def nonlinear(self, psi, d1, d2):
        spec = self.spec
        r1, r2, mask = self.log_ratios(psi, d1, d2)
        coefficient = spec.sign * spec.hbar0 / (2 * spec.m) * (spec.hbar_second - spec.hbar0)
        return coefficient * (r2 - r1 ** 2) * psi, mask

    def plane_wave_energy(self, p, amplitude=1.0):
        return p ** 2 / (2 * self.spec.m)


model_class = Nabla2LogModel
