import numpy as np
from scipy import fft

from ..constants import DEFAULT_FLOOR
from ..exceptions import DegenerateFieldError, InvalidArgument, ShapeError
from .wavefield import WaveField

SCHEMES = ('spectral', 'central-2')


def _check_scheme(scheme):
    if scheme not in SCHEMES:
        raise InvalidArgument("unknown differentiation scheme {}".format(scheme))


def twisted_derivatives(grid, values, wavenumber=0.0, scheme='spectral', first=None):
    """ First and second derivatives of psi = A exp(i kappa x), divided by the carrier.

    :param values: envelope samples A
    :param first: optional known envelope derivative A'; the second derivative is then
                  obtained by differentiating it once
    :return: (d1, d2) with d1 = A' + i kappa A and d2 = A'' + 2 i kappa A' - kappa**2 A
    """
    _check_scheme(scheme)
    a = np.asarray(values, dtype=np.complex128)
    kappa = complex(wavenumber)
    if scheme == 'spectral':
        ik = 1j * grid.odd_wavenumbers
        if first is None:
            spectrum = fft.fft(a)
            da = fft.ifft(ik * spectrum)
            d2a = fft.ifft(-grid.wavenumbers ** 2 * spectrum)
        else:
            da = np.asarray(first, dtype=np.complex128)
            d2a = fft.ifft(ik * fft.fft(da))
        if kappa == 0:
            return da, d2a
        return da + 1j * kappa * a, d2a + 2j * kappa * da - kappa ** 2 * a

    # carrier shifts are exact, only the envelope is differenced
    shift = np.exp(1j * kappa * grid.dx)
    right = shift * np.roll(a, -1)
    left = np.roll(a, 1) / shift
    d1 = (right - left) / (2 * grid.dx)
    d2 = (right - 2 * a + left) / grid.dx ** 2
    return d1, d2


def gradient(f, scheme='spectral'):
    """ Spatial derivative of a field. The carrier is preserved.

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * np.pi, 16)
    >>> f = WaveField(g, np.exp(3j * g.x))
    >>> np.allclose(gradient(f).values, 3j * f.values)
    True
    """
    d1, _ = twisted_derivatives(f.grid, f.values, f.wavenumber, scheme)
    return f.with_values(d1)


def laplacian(f, scheme='spectral'):
    """ Second spatial derivative of a field. The carrier is preserved.

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * np.pi, 16)
    >>> f = WaveField(g, np.exp(3j * g.x))
    >>> np.allclose(laplacian(f).values, -9 * f.values)
    True
    """
    _, d2 = twisted_derivatives(f.grid, f.values, f.wavenumber, scheme)
    return f.with_values(d2)


def floored(values, floor=DEFAULT_FLOOR):
    """ Replaces samples below floor * max|values| by the floored magnitude with their own phase.

    :return: (floored samples, boolean mask of floored nodes)

    >>> v, mask = floored(np.array([1.0, 0.0, -1e-20]), 1e-12)
    >>> mask.tolist()
    [False, True, True]
    >>> float(v[2].real)
    -1e-12
    """
    values = np.asarray(values, dtype=np.complex128)
    modulus = np.abs(values)
    top = modulus.max() if modulus.size else 0.0
    if not top > 0:
        raise DegenerateFieldError("field is identically zero")
    threshold = floor * top
    mask = modulus < threshold
    if not mask.any():
        return values, mask
    phase = np.where(modulus > 0, values / np.where(modulus > 0, modulus, 1.0), 1.0)
    res = np.where(mask, threshold * phase, values)
    return res, mask


def log_derivative(values, d1, floor=DEFAULT_FLOOR):
    """ d1 / values with the floor regularization, plus the floored-node mask """
    safe, mask = floored(values, floor)
    return np.asarray(d1) / safe, mask


def log_modulus(values, floor=DEFAULT_FLOOR):
    """ ln(psi* psi) with the floor regularization, plus the floored-node mask

    >>> lm, mask = log_modulus(np.array([2.0, 1.0]))
    >>> np.allclose(lm, [np.log(4.0), 0.0])
    True
    """
    safe, mask = floored(values, floor)
    return 2.0 * np.log(np.abs(safe)), mask


def log_gradient(f, floor=DEFAULT_FLOOR, scheme='spectral'):
    """ grad(psi)/psi pointwise.

    Nodes where |psi| < floor * max|psi| use the floored magnitude with psi's phase.
    The result has no carrier: the carrier contributes i*kappa to every node.

    :return: (field, floored-node mask)

    >>> from nlselab.field import make_grid
    >>> g = make_grid(2 * np.pi, 16)
    >>> lg, mask = log_gradient(WaveField(g, np.exp(3j * g.x)))
    >>> np.allclose(lg.values, 3j), bool(mask.any())
    (True, False)
    """
    if floor <= 0:
        raise InvalidArgument("floor must be positive")
    d1, _ = twisted_derivatives(f.grid, f.values, f.wavenumber, scheme)
    ratio, mask = log_derivative(f.values, d1, floor)
    return WaveField(f.grid, ratio), mask


def inner_product(f, g):
    """ sum_j conj(f_j) g_j dx with psi_j including the carriers

    >>> from nlselab.field import make_grid
    >>> grid = make_grid(2 * np.pi, 16)
    >>> e1, e2 = WaveField(grid, np.exp(1j * grid.x)), WaveField(grid, np.exp(2j * grid.x))
    >>> abs(inner_product(e1, e2)) < 1e-12
    True
    """
    if f.grid != g.grid:
        raise ShapeError("inner product of fields on different grids: {} and {}".format(f.grid, g.grid))
    integrand = np.conj(f.values) * g.values
    if f.twisted or g.twisted:
        # conj(exp(i kf x)) exp(i kg x)
        integrand = integrand * np.exp(1j * (g.wavenumber - np.conj(f.wavenumber)) * f.grid.x)
    return complex(np.sum(integrand) * f.grid.dx)


def wavenumber_norm2(f):
    """ norm**2 evaluated in wavenumber space (Parseval) """
    spectrum = fft.fft(f.samples)
    return float(np.sum(np.abs(spectrum) ** 2) * f.grid.dx / f.grid.n)
