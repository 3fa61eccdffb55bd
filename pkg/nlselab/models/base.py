import numpy as np

from ..exceptions import NotApplicable
from ..field.calculus import floored, log_modulus


class Model(object):
    """ One NLSE variant: H psi with i hbar_eff psi_t = H psi.

    All methods act on envelope samples ``psi`` and their carrier-twisted
    derivatives ``d1``, ``d2`` (see :func:`nlselab.field.twisted_derivatives`),
    so any discretization that provides derivatives can evaluate the model.
    H psi is split into kinetic, potential and nonlinear parts.
    """

    #: variant names served by the class
    variant_names = ()

    #: H depends on psi only through ratios psi'/psi, psi''/psi and linearly on psi,
    #: so fields with complex carriers are allowed
    carrier_free = True

    def __init__(self, spec):
        self.spec = spec

    def kinetic(self, d2):
        spec = self.spec
        return -(spec.hbar_eff * spec.hbar_lin / (2 * spec.m)) * d2

    def nonlinear(self, psi, d1, d2):
        """ :return: (nonlinear part of H psi, floored-node mask) """
        return np.zeros_like(psi), np.zeros(psi.shape, dtype=bool)

    def action_parts(self, psi, d1, d2, potential=None):
        """ :return: (dict of kinetic, potential and nonlinear parts of H psi, floored-node mask) """
        psi = np.asarray(psi, dtype=np.complex128)
        nonlinear, mask = self.nonlinear(psi, d1, d2)
        parts = {'kinetic': self.kinetic(d2),
                 'potential': np.zeros_like(psi) if potential is None else potential * psi,
                 'nonlinear': nonlinear}
        return parts, mask

    def density(self, psi, conj, d1, d2, potential=None):
        """ Field-theory Hamiltonian density with psi and psi* as independent samples.

        The default is psi* H psi, valid for every density linear in psi*.
        """
        parts, _ = self.action_parts(psi, d1, d2, potential)
        return conj * (parts['kinetic'] + parts['potential'] + parts['nonlinear'])

    def plane_wave_energy(self, p, amplitude=1.0):
        """ E of the plane wave amplitude * exp(i(p x - E t)/hbar_eff) at U = 0 """
        raise NotApplicable("variant {} has no plane-wave closed form".format(self.spec.variant))

    # shared nonlinear building blocks

    def log_ratios(self, psi, d1, d2=None):
        safe, mask = floored(psi, self.spec.floor)
        r1 = d1 / safe
        if d2 is None:
            return r1, mask
        return r1, d2 / safe, mask

    def log_term(self, psi):
        """ -b ln(psi* psi) psi """
        lm, mask = log_modulus(psi, self.spec.floor)
        return -self.spec.b * lm * psi, mask

    def log_density(self, psi, conj):
        """ -b psi* ln(psi* psi) psi + b psi* psi with psi* independent of psi """
        product = conj * psi
        scale = (self.spec.floor * np.max(np.abs(psi))) ** 2
        modulus = np.abs(product)
        if scale > 0 and np.any(modulus < scale):
            product = np.where(modulus < scale, scale * np.exp(1j * np.angle(product)), product)
        return -self.spec.b * product * np.log(product) + self.spec.b * conj * psi
