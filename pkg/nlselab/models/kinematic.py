import numpy as np

from .base import Model

variant_names = ('kinematic',)


class KinematicModel(Model):
    """ Linear equation plus the kinematic pressure (hbar0**2/2m)(a/m)|grad ln psi|**2 psi.

    The squared modulus keeps the term real, so the model is Hermitian
    and homogeneous of degree one.
    """

    variant_names = variant_names

    def pressure_coefficient(self):
        spec = self.spec
        return spec.hbar0 ** 2 / (2 * spec.m) * (spec.a / spec.m)

    def nonlinear(self, psi, d1, d2):
        r1, mask = self.log_ratios(psi, d1)
        return self.pressure_coefficient() * np.abs(r1) ** 2 * psi, mask

    def plane_wave_energy(self, p, amplitude=1.0):
        spec = self.spec
        return p ** 2 / (2 * spec.m) * (1 + spec.a / spec.m)


model_class = KinematicModel
