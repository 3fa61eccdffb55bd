import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..exceptions import InvalidArgument

#: fewest samples per time resolution
MIN_SAMPLES = 10 ** 4

#: smallest ratio between the largest and the smallest time resolution
MIN_SPAN = 100.0


class ScalingEstimate(object):
    """ Mean squared velocity <(dx/dt)**2> against the time resolution dt and its log-log slope """

    def __init__(self, dts, mean_square_velocity, standard_errors, mean_displacement, slope, half_width,
                 n_samples):
        self.dts = dts
        self.mean_square_velocity = mean_square_velocity
        #: batch-means standard errors of mean_square_velocity
        self.standard_errors = standard_errors
        #: <dx> / sqrt(2 D dt) per resolution
        self.mean_displacement = mean_displacement
        #: d ln<v**2> / d ln dt = 2(1/D - 1)
        self.slope = slope
        #: two-sigma confidence half width of the slope
        self.half_width = half_width
        #: samples per resolution
        self.n_samples = n_samples

    @property
    def fractal_dimension(self):
        """ path dimension 2 / (slope + 2) """
        return 2.0 / (self.slope + 2.0)

    @property
    def pairs(self):
        return list(zip(self.dts.tolist(), self.mean_square_velocity.tolist()))

    def as_dict(self):
        return {'pairs': self.pairs, 'slope': self.slope, 'half_width': self.half_width,
                'fractal_dimension': self.fractal_dimension, 'n_samples': self.n_samples}

    def __repr__(self):
        return "<ScalingEstimate:slope={:.4f}+-{:.4f}>".format(self.slope, self.half_width)


def _sample(diffusion, dt, n_samples, n_batches, stream):
    rng = np.random.default_rng(stream)
    sigma = np.sqrt(2 * diffusion * dt)
    steps = rng.normal(0.0, sigma, n_samples)
    squares = (steps / dt) ** 2
    batches = squares[:n_samples - n_samples % n_batches].reshape(n_batches, -1).mean(axis=1)
    error = batches.std(ddof=1) / np.sqrt(n_batches)
    return squares.mean(), error, steps.mean() / sigma


def wiener_velocity_scaling(diffusion, dt_list, n_samples=10 ** 5, seed=None, n_batches=20, workers=None):
    """ Samples Wiener increments with variance 2 D dt for each dt and fits ln<(dx/dt)**2> against ln dt.

    Every dt draws from its own stream spawned from ``numpy.random.SeedSequence(seed)``
    (PCG64 generator), so the estimate for a seed does not depend on the worker count.

    :param workers: thread pool size; None samples sequentially
    :return: :class:`ScalingEstimate`
    """
    if not diffusion > 0:
        raise InvalidArgument("diffusion constant must be positive, got {}".format(diffusion))
    dts = np.unique(np.asarray(dt_list, dtype=float))
    if dts.size < 2 or not dts[0] > 0:
        raise InvalidArgument("need at least two distinct positive time resolutions")
    if dts[-1] / dts[0] < MIN_SPAN:
        raise InvalidArgument("time resolutions span {:.3g}, need at least two decades".format(dts[-1] / dts[0]))
    if n_samples < MIN_SAMPLES:
        raise InvalidArgument("need at least {} samples per resolution, got {}".format(MIN_SAMPLES, n_samples))
    if n_batches < 2 or n_batches > n_samples:
        raise InvalidArgument("batch count must lie in [2, n_samples]")

    streams = np.random.SeedSequence(seed).spawn(dts.size)
    args = ([diffusion] * dts.size, dts, [n_samples] * dts.size, [n_batches] * dts.size, streams)
    if workers:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sample, *args))
    else:
        results = list(map(_sample, *args))
    msv = np.array([r[0] for r in results])
    errors = np.array([r[1] for r in results])
    mean_displacement = np.array([r[2] for r in results])

    log_dt = np.log(dts)
    slope = float(np.polyfit(log_dt, np.log(msv), 1)[0])
    centered = log_dt - log_dt.mean()
    sigma = np.sqrt(np.sum(centered ** 2 * (errors / msv) ** 2)) / np.sum(centered ** 2)
    estimate = ScalingEstimate(dts, msv, errors, mean_displacement, slope, float(2 * sigma), int(n_samples))
    logging.debug("velocity scaling: {}".format(estimate))
    return estimate
