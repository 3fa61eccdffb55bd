import numpy as np
from scipy import fft

from ..exceptions import InvalidArgument, ShapeError
from ..field.grid import Grid1D
from ..models.operations import envelope_action, get_model


class SolitonProfile(object):
    """ Travelling wave psi = (F + iG)(x - Vt) exp(i(p x - E t)/hbar_c) sampled at t = 0.

    ``domain`` is either a periodic :class:`nlselab.field.Grid1D` or a
    :class:`nlselab.soliton.CollocationWindow`; y = x - Vt are its nodes.
    """

    def __init__(self, domain, F, G=None, p=0.0, E=0.0, V=0.0, hbar_c=1.0, dF=None, dG=None,
                 residual=None, converged=False, iterations=0, localized=True, mask=None, interior=None):
        F = np.array(F, dtype=float)
        G = np.zeros_like(F) if G is None else np.array(G, dtype=float)
        if F.shape != domain.x.shape or G.shape != F.shape:
            raise ShapeError("profile samples do not match the {} nodes of {}".format(domain.x.size, domain))
        if dF is not None and dG is None:
            dG = np.zeros_like(F)
        self.domain = domain
        #: real part of the envelope
        self.F = F
        #: imaginary part of the envelope
        self.G = G
        #: optional known derivatives of F and G
        self.dF = None if dF is None else np.array(dF, dtype=float)
        self.dG = None if dG is None else np.array(dG, dtype=float)
        #: carrier momentum
        self.p = p
        #: energy
        self.E = E
        #: speed
        self.V = float(V)
        #: Planck constant of the carrier exp(i(px - Et)/hbar_c)
        self.hbar_c = hbar_c
        #: relative residual reported by the solver
        self.residual = residual
        self.converged = converged
        self.iterations = iterations
        #: False for profiles growing without bound
        self.localized = localized
        #: zero-padded nodes past the end of the profile
        self.mask = np.zeros(F.shape, dtype=bool) if mask is None else np.array(mask, dtype=bool)
        #: profile on a window clear of the padding, None when there is no padding
        self.interior = interior

    @property
    def y(self):
        return self.domain.x

    @property
    def envelope(self):
        return self.F + 1j * self.G

    @property
    def envelope_derivative(self):
        if self.dF is None:
            return None
        return self.dF + 1j * self.dG

    @property
    def wavenumber(self):
        """ carrier wavenumber p / hbar_c """
        return self.p / self.hbar_c

    def replace(self, **kwargs):
        """ copy with some fields replaced; the solver diagnostics are reset unless given """
        values = dict(F=self.F, G=self.G, p=self.p, E=self.E, V=self.V, hbar_c=self.hbar_c, dF=self.dF,
                      dG=self.dG, localized=self.localized)
        values.update(kwargs)
        if not ('F' in kwargs or 'G' in kwargs):
            values.setdefault('mask', self.mask)
        if ('F' in kwargs or 'G' in kwargs) and 'dF' not in kwargs:
            values['dF'] = values['dG'] = None
        return SolitonProfile(self.domain, **values)

    def as_dict(self):
        return {'p': self.p, 'E': self.E, 'V': self.V, 'hbar_c': self.hbar_c, 'residual': self.residual,
                'converged': self.converged, 'iterations': self.iterations, 'localized': self.localized,
                'nodes': int(self.F.size), 'padded': int(np.count_nonzero(self.mask))}

    def __repr__(self):
        return "<SolitonProfile:p={},E={},V={},residual={}>".format(self.p, self.E, self.V, self.residual)


def envelope_residual(spec, domain, envelope, p, E, V, hbar_c, first=None):
    """ Residual of i hbar_eff psi_t = H psi for the travelling ansatz, divided by the carrier.

    psi_t / carrier = -V A' - (iE/hbar_c) A with A' the derivative of the envelope itself.

    :param first: known A', differentiated numerically otherwise
    :return: (residual samples, H psi / carrier samples)
    """
    envelope = np.asarray(envelope, dtype=np.complex128)
    if first is None:
        first, _ = domain.derivatives(envelope, 0.0, spec.scheme)
    first = np.asarray(first, dtype=np.complex128)
    kappa = p / hbar_c
    if complex(kappa).imag != 0 and not get_model(spec).carrier_free:
        raise InvalidArgument("variant {} needs a real carrier wavenumber".format(spec.variant))
    d1, d2 = domain.derivatives(envelope, kappa, spec.scheme, first=first)
    potential = spec.potential_on(envelope.size) if isinstance(domain, Grid1D) else None
    parts, _ = envelope_action(spec, envelope, d1, d2, potential)
    h = parts['kinetic'] + parts['potential'] + parts['nonlinear']
    dt = -V * first - 1j * (E / hbar_c) * envelope
    return 1j * spec.hbar_eff * dt - h, h


def relative_residual(residual, h):
    """ max|residual| / max|h|, or max|residual| when h vanishes """
    top = np.max(np.abs(h))
    worst = float(np.max(np.abs(residual)))
    return worst / top if top > 0 else worst


def translated(grid, values, shift):
    """ values(x - shift) on a periodic grid by a spectral phase shift """
    spectrum = fft.fft(values)
    return fft.ifft(spectrum * np.exp(-1j * grid.wavenumbers * shift))


def ansatz_residual(spec, profile, t_samples=(0.0,)):
    """ max over t of |i hbar psi_t - H psi| / |H psi| for the travelling ansatz of profile.

    On a periodic grid the envelope is translated by V t for every sample. On a collocation
    window the residual is evaluated in the co-moving frame, where it does not depend on t
    (the carrier factor cancels in the ratio). Padded profiles are evaluated on their interior.
    """
    if profile.interior is not None:
        profile = profile.interior
    if not isinstance(profile.domain, Grid1D):
        residual, h = envelope_residual(spec, profile.domain, profile.envelope, profile.p, profile.E,
                                        profile.V, profile.hbar_c, profile.envelope_derivative)
        return relative_residual(residual, h)
    worst = 0.0
    for t in t_samples:
        envelope = translated(profile.domain, profile.envelope, profile.V * t) if t else profile.envelope
        residual, h = envelope_residual(spec, profile.domain, envelope, profile.p, profile.E, profile.V,
                                        profile.hbar_c)
        worst = max(worst, relative_residual(residual, h))
    return worst


def speed_residual(spec, profile, V):
    """ max |Im residual| of a real envelope travelling at speed V.

    For the kinematic variant this is hbar0 |V - p/m| max|F'|: it vanishes for any F exactly at V = p/m.
    """
    if profile.interior is not None:
        profile = profile.interior
    residual, _ = envelope_residual(spec, profile.domain, profile.F, profile.p, profile.E, V, profile.hbar_c,
                                    profile.dF)
    return float(np.max(np.abs(residual.imag)))
