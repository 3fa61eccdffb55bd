import logging

import numpy as np

from ..constants import WEINBERG_PROBE_RANGE
from ..exceptions import NotApplicable
from ..models.operations import energy_qm, energy_ft, hamiltonian_density, time_derivative

#: variants whose density is a function of psi* without derivatives
WEINBERG_VARIANTS = ('linear', 'log-birula', 'cubic-gp', 'fractal')

__all__ = ['energy_qm', 'energy_ft', 'weinberg_check', 'expected_energy_gap']


def weinberg_check(spec, psi, probe_scale=1e-6, density=None):
    """ Compares the functional derivative dE_FT/dpsi*_j / dx with (H psi)_j.

    psi and psi* are independent samples of the density. Since the density
    depends on psi*_j only at node j, all nodes are probed at once: the
    central difference of the density under psi* -> psi* +- eps gives the
    derivative at every node.

    :param probe_scale: eps
    :param density: alternative density callable(spec, psi, conj) -> samples
    :return: max_j |derivative_j - (H psi)_j| / max_j |(H psi)_j|
    """
    if spec.variant not in WEINBERG_VARIANTS:
        raise NotApplicable("no Weinberg form check for variant {}".format(spec.variant))
    low, high = WEINBERG_PROBE_RANGE
    if not low <= probe_scale <= high:
        logging.warning("probe scale {} outside [{}, {}]: deviation dominated by probe noise".format(
            probe_scale, low, high))
    if psi.twisted:
        psi = psi.untwisted()
    if density is None:
        density = hamiltonian_density
    conj = np.conj(psi.values)
    upper = density(spec, psi, conj + probe_scale)
    lower = density(spec, psi, conj - probe_scale)
    derivative = (upper - lower) / (2 * probe_scale)
    h = time_derivative(spec, psi).h_action.values
    return float(np.max(np.abs(derivative - h)) / np.max(np.abs(h)))


def expected_energy_gap(spec, psi):
    """ E_FT - E_QM implied by the densities: b |psi|**2 integrated for the logarithmic variants,
    -(g/2) times the integral of |psi|**4 for cubic-gp, zero for densities linear in psi* """
    if spec.variant in ('log-birula', 'hydro-combined'):
        return complex(spec.b * psi.norm2)
    if spec.variant == 'cubic-gp':
        return complex(-0.5 * spec.g * np.sum(np.abs(psi.samples) ** 4) * psi.grid.dx)
    return 0j
