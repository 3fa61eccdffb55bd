import logging
import math

import numpy as np

from ..constants import LM_INITIAL_DAMPING, LM_DAMPING_UP, LM_DAMPING_DOWN, LM_JACOBIAN_STEP
from ..exceptions import InvalidArgument, RankDeficiencyError
from ..utils import cached_property

#: damping beyond which the iteration is considered stalled
MAX_DAMPING = 1e16


def cheb_diff_matrix(n):
    """ Chebyshev points x_j = cos(j pi / n), j = 0..n, and the first-derivative matrix on them.

    Diagonal entries are minus the off-diagonal row sums, so constants are differentiated to zero.

    >>> x, d = cheb_diff_matrix(4)
    >>> x.tolist()[2]
    0.0
    >>> bool(np.allclose(d @ x ** 2, 2 * x))
    True
    """
    if n < 1:
        raise InvalidArgument("Chebyshev matrix needs n >= 1")
    j = np.arange(n + 1)
    # sin form keeps the points exactly symmetric
    x = np.sin(math.pi * (n - 2 * j) / (2 * n))
    c = np.where((j == 0) | (j == n), 2.0, 1.0) * (-1.0) ** j
    dx = x[:, None] - x[None, :]
    d = np.outer(c, 1.0 / c) / (dx + np.eye(n + 1))
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(d, -d.sum(axis=1))
    return x, d


class CollocationWindow(object):
    """ Chebyshev collocation nodes on [-half_width, half_width].

    Nodes run from +half_width down to -half_width; for even n the middle node is y = 0.
    The window shares the ``x`` / ``derivatives`` interface of :class:`nlselab.field.Grid1D`,
    so profiles and models work on either.
    """

    def __init__(self, half_width, n):
        if not half_width > 0:
            raise InvalidArgument("window half width must be positive, got {}".format(half_width))
        if n < 4:
            raise InvalidArgument("window needs n >= 4, got {}".format(n))
        self.half_width = float(half_width)
        self.n = int(n)

    @cached_property
    def _unit(self):
        return cheb_diff_matrix(self.n)

    @cached_property
    def x(self):
        return self.half_width * self._unit[0]

    @cached_property
    def d1_matrix(self):
        return self._unit[1] / self.half_width

    @cached_property
    def d2_matrix(self):
        d2 = self.d1_matrix @ self.d1_matrix
        np.fill_diagonal(d2, 0.0)
        np.fill_diagonal(d2, -d2.sum(axis=1))
        return d2

    @property
    def center(self):
        """ index of y = 0, None for odd n """
        return self.n // 2 if self.n % 2 == 0 else None

    def derivatives(self, values, wavenumber=0.0, scheme=None, first=None):
        """ Carrier-twisted derivatives, see :func:`nlselab.field.twisted_derivatives`.
        scheme is accepted for interface compatibility and ignored. """
        a = np.asarray(values, dtype=np.complex128)
        if first is None:
            da = self.d1_matrix @ a
            d2a = self.d2_matrix @ a
        else:
            da = np.asarray(first, dtype=np.complex128)
            d2a = self.d1_matrix @ da
        kappa = complex(wavenumber)
        if kappa == 0:
            return da, d2a
        return da + 1j * kappa * a, d2a + 2j * kappa * da - kappa ** 2 * a

    def __eq__(self, other):
        return isinstance(other, CollocationWindow) and self.n == other.n and self.half_width == other.half_width

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.half_width, self.n))

    def __repr__(self):
        return "<CollocationWindow:Y={},n={}>".format(self.half_width, self.n)


class LMResult(object):

    def __init__(self, z, residual_norm, iterations, converged, damping_history):
        self.z = z
        #: max |r| at z
        self.residual_norm = residual_norm
        self.iterations = iterations
        self.converged = converged
        self.damping_history = damping_history


def _jacobian(fun, z, r):
    jac = np.empty((r.size, z.size))
    for j in range(z.size):
        h = LM_JACOBIAN_STEP * max(1.0, abs(z[j]))
        shifted = z.copy()
        shifted[j] += h
        jac[:, j] = (fun(shifted) - r) / h
    return jac


def levenberg_marquardt(fun, z0, tol=1e-10, max_iter=100, damping=LM_INITIAL_DAMPING):
    """ Damped Gauss-Newton minimization of |fun(z)|**2 with a forward-difference Jacobian.

    The normal matrix is damped by damping * diag(J^T J). The damping is divided by 10 after an
    accepted step and multiplied by 10 after a rejected one.

    :param fun: real residual vector as a function of the real unknowns
    :param tol: convergence when max |r| < tol
    :return: :class:`LMResult` holding the best iterate
    """
    z = np.array(z0, dtype=float)
    r = fun(z)
    cost = float(r @ r)
    history = [damping]
    iterations = 0
    while iterations < max_iter and np.max(np.abs(r)) >= tol:
        iterations += 1
        jac = _jacobian(fun, z, r)
        normal = jac.T @ jac
        grad = jac.T @ r
        scale = np.diag(normal).copy()
        if not np.all(scale > 0):
            raise RankDeficiencyError("unknown {} does not enter the residual".format(int(np.argmin(scale))),
                                      history)
        accepted = False
        while damping < MAX_DAMPING:
            try:
                step = np.linalg.solve(normal + damping * np.diag(scale), -grad)
            except np.linalg.LinAlgError:
                raise RankDeficiencyError("singular normal equations at damping {:g}".format(damping), history)
            trial = z + step
            r_trial = fun(trial)
            cost_trial = float(r_trial @ r_trial)
            if np.isfinite(cost_trial) and cost_trial < cost:
                z, r, cost = trial, r_trial, cost_trial
                damping /= LM_DAMPING_DOWN
                history.append(damping)
                accepted = True
                break
            damping *= LM_DAMPING_UP
            history.append(damping)
        logging.debug("lm iteration {}: max|r| = {:.3e}, damping {:.1e}".format(iterations, np.max(np.abs(r)),
                                                                               damping))
        if not accepted:
            break
    residual_norm = float(np.max(np.abs(r)))
    return LMResult(z, residual_norm, iterations, residual_norm < tol, history)
