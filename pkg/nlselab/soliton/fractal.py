import logging

import numpy as np

from ..exceptions import InvalidArgument, NotApplicable, RankDeficiencyError
from .collocation import CollocationWindow, levenberg_marquardt
from .profile import SolitonProfile, envelope_residual, relative_residual


def _check_variant(spec):
    if spec.variant != 'fractal':
        raise NotApplicable("collocation solver handles the fractal variant, not {}".format(spec.variant))


def fractal_profile(spec, p, E, y):
    """ Closed-form travelling envelope of the fractal variant with A(0) = 1, A'(0) = 0:

        A(y) = cos(sigma y)**(alpha/hbar),  sigma = (hbar/alpha) sqrt(-K),  K = (p**2 - 2mE)/hbar**2

    with hbar = alpha + i beta and principal branches. The speed is p/m.

    >>> from nlselab.models import ModelSpec
    >>> a = fractal_profile(ModelSpec('fractal', alpha=1.0), 1.0, 1.5, np.array([0.0, 0.5]))
    >>> bool(np.allclose(a, np.cos(np.sqrt(2) * np.array([0.0, 0.5]))))
    True
    """
    _check_variant(spec)
    hbar = spec.hbar_eff
    K = (p ** 2 - 2 * spec.m * E) / hbar ** 2
    sigma = (hbar / spec.alpha) * np.sqrt(-complex(K))
    return np.exp((spec.alpha / hbar) * np.log(np.cos(sigma * np.asarray(y, dtype=float))))


def collocation_solve_fractal(spec, p, E, guess, tol=1e-8, max_iter=50):
    """ Solves for the travelling envelope A = F + iG and the speed V of the fractal variant.

    The carrier is exp(i(p x - E t)/hbar) with the complex hbar. Unknowns are F and G at the
    window nodes and V. The equations are the residual of i hbar psi_t = H psi at the interior
    nodes, A(0) = 1, A(Y) = A(-Y) and A'(Y) = -A'(-Y).

    :param guess: SolitonProfile on an even :class:`CollocationWindow` supplying F, G and V
    :return: SolitonProfile with the relative residual at all nodes; converged=False keeps the best iterate
    """
    _check_variant(spec)
    window = guess.domain
    if not isinstance(window, CollocationWindow) or window.center is None:
        raise InvalidArgument("fractal collocation needs a Chebyshev window with an even number of intervals")
    if not np.any(guess.F) and not np.any(guess.G):
        raise RankDeficiencyError("zero envelope is a trivial stationary point")
    hbar = spec.hbar_eff
    size = window.n + 1
    center = window.center
    d1 = window.d1_matrix

    def unpack(z):
        return z[:size] + 1j * z[size:2 * size], z[-1]

    def residual(z):
        envelope, speed = unpack(z)
        res, _ = envelope_residual(spec, window, envelope, p, E, speed, hbar)
        slope = d1 @ envelope
        conditions = np.array([envelope[center] - 1, envelope[0] - envelope[-1], slope[0] + slope[-1]])
        res = np.concatenate([res[1:-1], conditions])
        return np.concatenate([res.real, res.imag])

    z0 = np.concatenate([guess.F, guess.G, [guess.V]])
    fit = levenberg_marquardt(residual, z0, tol=tol, max_iter=max_iter)
    envelope, speed = unpack(fit.z)
    res, h = envelope_residual(spec, window, envelope, p, E, speed, hbar)
    profile = SolitonProfile(window, envelope.real, envelope.imag, p=p, E=E, V=speed, hbar_c=hbar)
    profile.residual = relative_residual(res, h)
    profile.iterations = fit.iterations
    profile.converged = bool(fit.converged and profile.residual <= tol)
    if profile.converged:
        logging.debug("fractal profile: V = {!r}, residual {:.3e} after {} iterations".format(
            speed, profile.residual, fit.iterations))
    else:
        logging.warning("fractal collocation did not converge: residual {:.3e} after {} iterations".format(
            profile.residual, fit.iterations))
    return profile
