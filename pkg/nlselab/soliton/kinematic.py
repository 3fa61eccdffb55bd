import logging
import math

import numpy as np
from scipy.integrate import solve_ivp

from ..exceptions import InvalidArgument, NumericalFailure
from .collocation import CollocationWindow
from .profile import SolitonProfile

#: 'printed': -F''F - (a/m)F'**2 + kappa F**2 = 0
#: 'wave-equation': F''F - (a/m)F'**2 + kappa F**2 = 0, the real part of the kinematic
#: wave equation for the travelling ansatz
FORMS = ('printed', 'wave-equation')

#: shooting stops when F drops below this level (compacton edge) ...
ZERO_LEVEL = 1e-4
#: ... or when |F'| exceeds this one (steep compacton edge) ...
SLOPE_LEVEL = 1e3
#: ... or when |F| exceeds this one (growth guard)
GROWTH_LEVEL = 1e8

#: fraction of the stop position covered by the interior window
WINDOW_FRACTION = 0.8


def kinematic_kappa(m, hbar0, a, E, p):
    """ kappa = (2 m E - p**2 (1 + a/m)) / hbar0**2

    >>> kinematic_kappa(1.0, 1.0, 1.0, 0.5, 1.0)
    -1.0
    """
    return (2 * m * E - p ** 2 * (1 + a / m)) / hbar0 ** 2


def riccati_coefficients(m, a, kappa, form='printed'):
    """ (rhs, c) of u'' + c u'**2 = rhs for u = ln F """
    if form == 'printed':
        return kappa, 1 + a / m
    if form == 'wave-equation':
        return -kappa, 1 - a / m
    raise InvalidArgument("unknown profile equation form {}".format(form))


def riccati_profile(y, rhs, c):
    """ exp(u) with u'' + c u'**2 = rhs, u(0) = u'(0) = 0:
    cos(sqrt(-rhs c) y)**(1/c) for rhs < 0, cosh(sqrt(rhs c) y)**(1/c) for rhs > 0.

    >>> y = np.array([0.0, 0.5])
    >>> bool(np.allclose(riccati_profile(y, -1.0, 2.0), np.sqrt(np.cos(np.sqrt(2) * y))))
    True
    """
    if not c > 0:
        raise InvalidArgument("closed form needs c > 0, got {}".format(c))
    y = np.asarray(y, dtype=float)
    if rhs < 0:
        return np.cos(math.sqrt(-rhs * c) * y) ** (1 / c)
    if rhs > 0:
        return np.cosh(math.sqrt(rhs * c) * y) ** (1 / c)
    return np.ones_like(y)


def _rhs(a_over_m, kappa, form):
    sign = -1.0 if form == 'printed' else 1.0

    def fun(y, state):
        f, df = state
        # F'' from the profile equation
        return [df, a_over_m * sign * df ** 2 / f - sign * kappa * f]

    def zero(y, state):
        return state[0] - ZERO_LEVEL
    zero.terminal = True
    zero.direction = -1

    def steep(y, state):
        return abs(state[1]) - SLOPE_LEVEL
    steep.terminal = True
    steep.direction = 1

    def growth(y, state):
        return abs(state[0]) - GROWTH_LEVEL
    growth.terminal = True
    growth.direction = 1

    return fun, (zero, steep, growth)


def profile_equation_residual(F, dF, d2F, a_over_m, kappa, form='printed'):
    """ max |profile equation| relative to its largest term """
    terms = [F * d2F, a_over_m * dF ** 2, kappa * F ** 2]
    if form == 'printed':
        residual = -terms[0] - terms[1] + terms[2]
    else:
        residual = terms[0] - terms[1] + terms[2]
    scale = max(float(np.max(np.abs(t))) for t in terms)
    worst = float(np.max(np.abs(residual)))
    return worst / scale if scale > 0 else worst


def shoot_kinematic_profile(m, hbar0, a, E, p, y_max, tol=1e-6, form='printed', n=48):
    """ Integrates the kinematic profile equation from F(0) = 1, F'(0) = 0 and samples the
    even solution on the Chebyshev window [-y_max, y_max].

    Integration stops at the first of F = ZERO_LEVEL or |F'| = SLOPE_LEVEL (localized, compacton-like)
    or |F| = GROWTH_LEVEL. Nodes past the stop are zero-padded and flagged in ``mask``.
    The equation is singular at the edge, so the residual is certified on the interior window of
    half width min(y_max, WINDOW_FRACTION * stop position), kept as ``interior``.
    F' is taken from the integrated state.

    :return: SolitonProfile with G = 0 and V = p/m; residual is the relative profile-equation residual
    """
    if not m > 0 or not hbar0 > 0:
        raise InvalidArgument("mass and hbar0 must be positive")
    if not y_max > 0:
        raise InvalidArgument("y_max must be positive, got {}".format(y_max))
    kappa = kinematic_kappa(m, hbar0, a, E, p)
    _, c = riccati_coefficients(m, a, kappa, form)
    if not c > 0:
        raise InvalidArgument("profile equation needs c > 0, got c = {} for a = {}".format(c, a))

    fun, events = _rhs(a / m, kappa, form)
    sol = solve_ivp(fun, (0.0, y_max), [1.0, 0.0], method='DOP853', rtol=1e-12, atol=1e-14,
                    dense_output=True, events=events)
    if sol.status < 0:
        raise NumericalFailure("profile integration failed: {}".format(sol.message))
    localized = sol.t_events[0].size > 0 or sol.t_events[1].size > 0
    y_stop = None
    if sol.status == 1:
        y_stop = sol.t[-1]
        logging.debug("profile event at y = {:.6g} ({})".format(y_stop, 'edge' if localized else 'growth'))
        if not localized:
            logging.info("kinematic profile with kappa = {} exceeds {} at y = {:.6g}".format(
                kappa, GROWTH_LEVEL, y_stop))

    def sample(window, stop):
        y = window.x
        inside = np.ones(y.shape, dtype=bool) if stop is None else np.abs(y) < stop
        F, dF = np.zeros_like(y), np.zeros_like(y)
        state = sol.sol(np.abs(y[inside]))
        F[inside] = state[0]
        dF[inside] = np.sign(y[inside]) * state[1]
        return F, dF, ~inside

    interior_window = CollocationWindow(y_max if y_stop is None else min(y_max, WINDOW_FRACTION * y_stop), n)
    F, dF, _ = sample(interior_window, None)
    d2F = interior_window.d1_matrix @ dF
    residual = profile_equation_residual(F, dF, d2F, a / m, kappa, form)
    V = imaginary_part_speed_check(a, m, p)
    converged = residual <= tol
    interior = SolitonProfile(interior_window, F, p=p, E=E, V=V, hbar_c=hbar0, dF=dF, residual=residual,
                              converged=converged, iterations=int(sol.nfev), localized=localized)
    if y_stop is None:
        return interior

    window = CollocationWindow(y_max, n)
    F, dF, mask = sample(window, y_stop)
    return SolitonProfile(window, F, p=p, E=E, V=V, hbar_c=hbar0, dF=dF, residual=residual, converged=converged,
                          iterations=int(sol.nfev), localized=localized, mask=mask, interior=interior)


def imaginary_part_speed_check(a, m, p):
    """ Speed for which the imaginary part of the kinematic profile equation vanishes for any F.
    It does not depend on a.

    >>> imaginary_part_speed_check(0.5, 1.0, 1.0)
    1.0
    """
    if not m > 0:
        raise InvalidArgument("mass must be positive, got {}".format(m))
    return p / m
