from .base import Model

variant_names = ('fractal',)


class FractalModel(Model):
    """ Complex Planck constant hbar = alpha + i beta:

        i hbar psi_t = -(hbar alpha/2m) psi'' + U psi - i (hbar beta/2m)(grad ln psi)**2 psi

    The last term is the imaginary potential iW. The density psi* H psi
    makes both energy functionals coincide. beta = 0 is the linear equation.
    """

    variant_names = variant_names

    def nonlinear(self, psi, d1, d2):
        spec = self.spec
        r1, mask = self.log_ratios(psi, d1)
        return -1j * (spec.hbar_eff * spec.beta / (2 * spec.m)) * r1 ** 2 * psi, mask

    def plane_wave_energy(self, p, amplitude=1.0):
        # p is the momentum label of exp(i p x / hbar); complex p is allowed
        return p ** 2 / (2 * self.spec.m)


model_class = FractalModel
