class NLSELabException(Exception):
    pass


class InvalidArgument(NLSELabException, ValueError):
    pass


class AliasingError(InvalidArgument):
    """ Plane wave wavenumber is not representable on the grid (|q| >= n/2) """
    pass


class DomainTooSmallError(InvalidArgument):
    pass


class ShapeError(NLSELabException, ValueError):
    pass


class NotApplicable(NLSELabException):
    pass


class NumericalFailure(NLSELabException):
    """ Base for failures of a numerical procedure on valid input """

    #: time step and time of the failure, when it happened during an evolution
    step = None
    t = None

    def at(self, step, t):
        self.step, self.t = step, t
        return self

    def __str__(self):
        msg = super(NumericalFailure, self).__str__()
        if self.t is None:
            return msg
        return "{} at step {} (t={})".format(msg, self.step, self.t)


class DegenerateFieldError(NumericalFailure):
    pass


class StabilityError(NumericalFailure):
    pass


class BlowUpError(NumericalFailure):

    def __init__(self, msg, step=None, t=None):
        super(BlowUpError, self).__init__(msg)
        self.at(step, t)


class NotASolutionError(NumericalFailure):
    pass


class PhaseUnwrapError(NumericalFailure):
    pass


class RankDeficiencyError(NumericalFailure):

    def __init__(self, msg, damping_history=()):
        super(RankDeficiencyError, self).__init__(msg)
        self.damping_history = list(damping_history)


class ConvergenceError(NumericalFailure):
    """ Iterative solver stopped short of its tolerance; ``profile`` keeps the best iterate """

    def __init__(self, msg, profile=None):
        super(ConvergenceError, self).__init__(msg)
        self.profile = profile


class ConfigError(NLSELabException):

    def __init__(self, msg, field=None, line=None):
        details = msg
        if field:
            details = "{}: {}".format(field, details)
        if line:
            details = "line {}: {}".format(line, details)
        super(ConfigError, self).__init__(details)
        self.field = field
        self.line = line
