import numpy as np

from ..constants import DEFAULT_FLOOR
from ..exceptions import DegenerateFieldError, NotApplicable, InvalidArgument
from ..field.calculus import inner_product, log_gradient
from ..field.wavefield import WaveField


class ModelOutput(object):
    """ Result of evaluating a model on a field """

    def __init__(self, dpsi_dt, h_action, mask, parts):
        #: time derivative as a field
        self.dpsi_dt = dpsi_dt
        #: H psi with i hbar_eff psi_t = H psi
        self.h_action = h_action
        #: floored-node mask of the regularized logarithms
        self.mask = mask
        #: kinetic, potential and nonlinear parts of H psi (envelope samples)
        self.parts = parts

    @property
    def floored(self):
        return int(np.count_nonzero(self.mask))


def get_model(spec):
    from . import models_by_variant
    model_class = models_by_variant.get(spec.variant)
    if model_class is None:
        raise InvalidArgument("unknown model variant '{}'".format(spec.variant))
    return model_class(spec)


def _check_carrier(model, psi):
    if psi.wavenumber.imag != 0 and not model.carrier_free:
        raise NotApplicable("variant {} does not accept complex carriers".format(model.spec.variant))


def envelope_action(spec, psi, d1, d2, potential=None):
    """ H psi evaluated from envelope samples and twisted derivatives.

    :return: (parts dict, floored-node mask); H psi is the sum of the parts
    """
    return get_model(spec).action_parts(psi, d1, d2, potential)


def time_derivative(spec, psi, scheme=None):
    """ dpsi/dt of the variant described by spec.

    >>> from nlselab.field import make_grid
    >>> from nlselab.models import ModelSpec
    >>> g = make_grid(2 * np.pi, 16)
    >>> out = time_derivative(ModelSpec('linear'), WaveField(g, np.exp(2j * g.x)))
    >>> np.allclose(out.dpsi_dt.values, -2j * np.exp(2j * g.x))
    True
    """
    model = get_model(spec)
    _check_carrier(model, psi)
    d1, d2 = psi.grid.derivatives(psi.values, psi.wavenumber, scheme or spec.scheme)
    parts, mask = model.action_parts(psi.values, d1, d2, spec.potential_on(psi.grid.n))
    h = parts['kinetic'] + parts['potential'] + parts['nonlinear']
    return ModelOutput(psi.with_values(h / (1j * spec.hbar_eff)), psi.with_values(h), mask, parts)


def hamiltonian_density(spec, psi, conj=None, scheme=None):
    """ Per-node field-theory Hamiltonian density; its sum times dx is E_FT.

    :param conj: samples standing in for psi*; defaults to the conjugate of psi.
                 Passing them allows varying psi* independently of psi.
    """
    model = get_model(spec)
    _check_carrier(model, psi)
    if conj is not None and psi.twisted:
        raise InvalidArgument("independent psi* samples need an untwisted field")
    d1, d2 = psi.grid.derivatives(psi.values, psi.wavenumber, scheme or spec.scheme)
    if conj is None:
        conj = np.conj(psi.values)
    density = model.density(psi.values, np.asarray(conj), d1, d2, spec.potential_on(psi.grid.n))
    if psi.twisted:
        density = density * np.abs(psi.carrier) ** 2
    return density


def homogeneity_defect(spec, psi, lam):
    """ time_derivative(lam psi) - lam time_derivative(psi) """
    if lam == 0:
        raise InvalidArgument("lambda must be non-zero")
    scaled = time_derivative(spec, lam * psi).dpsi_dt
    return scaled - lam * time_derivative(spec, psi).dpsi_dt


def log_identity_check(psi, floor=DEFAULT_FLOOR, scheme='spectral'):
    """ max |grad ln(psi/psi*) grad ln(psi*/psi) + (grad ln(psi/psi*))**2|

    Both logarithmic gradients are computed independently from the fields psi/psi* and psi*/psi.

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * np.pi, 32)
    >>> log_identity_check(WaveField(g, np.exp(3j * g.x))) < 1e-12
    True
    """
    samples = psi.samples
    modulus = np.abs(samples)
    if not modulus.max() > 0 or np.any(modulus < floor * modulus.max()):
        raise DegenerateFieldError("log identity needs a node-free field")
    ratio = samples / np.conj(samples)
    forward, _ = log_gradient(WaveField(psi.grid, ratio), floor, scheme)
    backward, _ = log_gradient(WaveField(psi.grid, 1.0 / ratio), floor, scheme)
    return float(np.max(np.abs(forward.values * backward.values + forward.values ** 2)))


def energy_qm(spec, psi):
    """ <psi, H psi> """
    return inner_product(psi, time_derivative(spec, psi).h_action)


def energy_ft(spec, psi):
    """ integral of the field-theory Hamiltonian density """
    return complex(np.sum(hamiltonian_density(spec, psi)) * psi.grid.dx)


def expected_homogeneity_defect(spec, psi, lam):
    """ Closed form of :func:`homogeneity_defect`.

    Zero for the homogeneous variants, -(b/i hbar0) ln|lam|**2 lam psi for the logarithmic
    term and (g/i hbar0)(|lam|**2 - 1) lam |psi|**2 psi for the cubic one.
    """
    if lam == 0:
        raise InvalidArgument("lambda must be non-zero")
    values = psi.values
    if spec.variant in ('log-birula', 'hydro-combined'):
        return psi.with_values(-(spec.b / (1j * spec.hbar0)) * np.log(abs(lam) ** 2) * lam * values)
    if spec.variant == 'cubic-gp':
        return psi.with_values((spec.g / (1j * spec.hbar0)) * (abs(lam) ** 2 - 1) * lam * np.abs(values) ** 2 * values)
    return psi.with_values(np.zeros_like(values))
