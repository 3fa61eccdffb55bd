from .base import Model

variant_names = ('linear',)


class LinearModel(Model):
    """ i hbar0 psi_t = -(hbar0**2/2m) psi'' + U psi """

    variant_names = variant_names

    def plane_wave_energy(self, p, amplitude=1.0):
        return p ** 2 / (2 * self.spec.m)


model_class = LinearModel
