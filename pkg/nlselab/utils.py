import numpy as np


class cached_property(object):
    """ A property that is only computed once per instance and then replaces
        itself with an ordinary attribute. Arrays are frozen before caching. """

    def __init__(self, func):
        self.__doc__ = getattr(func, '__doc__')
        self.func = func

    def __get__(self, obj, cls):
        if obj is None: return self
        value = self.func(obj)
        if isinstance(value, np.ndarray):
            value.flags.writeable = False
        obj.__dict__[self.func.__name__] = value
        return value


def frozen(array):
    """ Returns a read-only copy of array

    >>> a = frozen([1, 2])
    >>> a.flags.writeable
    False
    """
    res = np.array(array)
    res.flags.writeable = False
    return res


def max_abs(values):
    """
    >>> max_abs([1, -3j, 2])
    3.0
    """
    values = np.asarray(values)
    if values.size == 0:
        return 0.0
    return float(np.max(np.abs(values)))


def relative_deviation(measured, expected, eps=1e-300):
    """ |measured - expected| / max(|expected|, eps)

    >>> relative_deviation(1.01, 1.0) < 0.0101
    True
    >>> relative_deviation(0.0, 0.0)
    0.0
    """
    return float(abs(measured - expected) / max(abs(expected), eps))


def rms(values):
    """ Root mean square of the moduli

    >>> rms([3, 4j]) == (12.5) ** 0.5
    True
    """
    values = np.asarray(values)
    return float(np.sqrt(np.mean(np.abs(values) ** 2)))
