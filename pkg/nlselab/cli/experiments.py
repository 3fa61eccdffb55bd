import logging
import math

import numpy as np

from ..analysis import measure_dispersion, energy_qm, energy_ft, expected_energy_gap, weinberg_check, \
    plane_wave, select_nabla2log_sign, round_trip_error
from ..evolution import DiagnosticsRecord, EvolveConfig, evolve, stability_limit
from ..exceptions import AliasingError, ConfigError, ConvergenceError, InvalidArgument, NotApplicable, ShapeError
from ..field import gaussian_packet, periodic_packet, random_field
from ..models import homogeneity_defect, expected_homogeneity_defect
from ..motion import FractalFunctionParams, fractal_function_eval, scale_exponent, wiener_velocity_scaling
from ..soliton import CollocationWindow, SolitonProfile, ansatz_residual, collocation_solve_fractal, \
    fractal_profile, fit_gausson, gausson_field, kinematic_kappa, riccati_coefficients, riccati_profile, \
    shoot_kinematic_profile

#: builders for run.initial, with the keys each one accepts
initial_fields = {
    'gaussian': (gaussian_packet, ('center', 'width', 'q', 'amplitude')),
    'periodic': (periodic_packet, ('concentration', 'twist', 'amplitude')),
    'random': (random_field, ('modes', 'seed', 'offset', 'scale')),
    'plane-wave': (plane_wave, ('q', 'amplitude')),
}


class Outcome(object):
    """ Results of one experiment: scalar results, checks against tolerances, a data series and fields """

    def __init__(self, experiment):
        self.experiment = experiment
        self.results = dict()
        #: name -> {value, tolerance, passed}
        self.checks = dict()
        self.columns = ()
        self.rows = []
        #: field snapshots in time order
        self.fields = []

    def check(self, name, value, tolerance):
        """ Records value < tolerance. A tolerance of None skips the check. """
        if tolerance is None:
            return True
        value = float(value)
        passed = bool(math.isfinite(value) and value < tolerance)
        self.checks[name] = {'value': value, 'tolerance': tolerance, 'passed': passed}
        if not passed:
            logging.warning("check {} failed: {!r} >= {!r}".format(name, value, tolerance))
        return passed

    @property
    def passed(self):
        return all(c['passed'] for c in self.checks.values())

    def __repr__(self):
        return "<Outcome:{},{} checks,passed={}>".format(self.experiment, len(self.checks), self.passed)


class ExperimentRunner(object):
    """ Runs the experiment named in an :class:`ExperimentConfig`.

    Each experiment is a ``run_<name>`` method filling an :class:`Outcome`; names with dashes
    map to methods through ``experiment_aliases``. The first docstring line of the method is
    its catalog description.
    """

    experiment_aliases = {'energy-functionals': 'energy_functionals',
                          'soliton-gausson': 'soliton_gausson',
                          'soliton-kinematic': 'soliton_kinematic',
                          'soliton-fractal': 'soliton_fractal',
                          'wiener-scaling': 'wiener_scaling',
                          'fractal-function': 'fractal_function'}

    #: run keys accepted on top of the common ones
    accepted_keys = {
        'dispersion': ('q', 'convention', 'amplitude'),
        'evolve': ('initial',),
        'energy_functionals': ('samples', 'modes', 'offset', 'scale'),
        'homogeneity': ('lambdas', 'modes', 'offset', 'scale'),
        'weinberg': ('probe_scale', 'modes', 'offset', 'scale'),
        'soliton_gausson': ('amplitude', 'q', 'offset'),
        'soliton_kinematic': ('E', 'p', 'y_max', 'form', 'nodes'),
        'soliton_fractal': ('E', 'p', 'half_width', 'nodes', 'steps'),
        'linearize': ('initial',),
        'wiener_scaling': ('diffusion', 'dt_list', 'n_samples', 'n_batches', 'workers'),
        'fractal_function': ('f0', 'zeta', 'scale', 'b_rg', 'epsilons', 'x'),
    }

    #: tolerance defaults; None means the check only runs when configured
    default_tolerances = {
        'dispersion': {'deviation': 1e-6, 'growth': 1e-8},
        'evolve': {'norm_drift': None, 'norm_rate': None},
        'energy_functionals': {'gap': 1e-8},
        'homogeneity': {'defect': 1e-10},
        'weinberg': {'weinberg': 1e-5},
        'soliton_gausson': {'width': 1e-6, 'residual': 1e-8, 'drift': 1e-4},
        'soliton_kinematic': {'closed_form': 1e-6, 'residual': 1e-6, 'ansatz': 1e-6},
        'soliton_fractal': {'residual': 1e-6, 'closed_form': 1e-6},
        'linearize': {'residual': 1e-4, 'round_trip': 1e-10},
        'wiener_scaling': {'slope': 0.02},
        'fractal_function': {'exponent': 1e-3},
    }

    def __init__(self, config, seed=None):
        self.config = config
        #: --seed overrides run.seed
        self.seed = seed if seed is not None else config.value('seed', None, 'integer')
        #: run values as read, defaults included
        self.used = dict()
        self._spec = None
        self._grid = None
        self._tolerances = dict()

    @classmethod
    def method_name(cls, experiment):
        return cls.experiment_aliases.get(experiment, experiment)

    @classmethod
    def catalog(cls):
        """ alphabetized (name, description) pairs

        >>> [name for name, _ in ExperimentRunner.catalog()][:3]
        ['dispersion', 'energy-functionals', 'evolve']
        """
        names = dict((v, k) for k, v in cls.experiment_aliases.items())
        res = []
        for attr in dir(cls):
            if not attr.startswith('run_'):
                continue
            key = attr[len('run_'):]
            doc = (getattr(cls, attr).__doc__ or '').strip().splitlines()
            res.append((names.get(key, key), doc[0].strip() if doc else ''))
        return sorted(res)

    def run(self):
        key = self.method_name(self.config.experiment)
        handler = getattr(self, 'run_' + key, None) if key in self.accepted_keys else None
        if handler is None:
            raise self.config.error('experiment', "unknown experiment '{}'".format(self.config.experiment))
        self.config.check_run_keys(self.accepted_keys[key], self.default_tolerances[key])
        self._tolerances = dict(self.default_tolerances[key])
        self._tolerances.update(self.config.value('tolerances', {}, 'object'))
        outcome = Outcome(self.config.experiment)
        logging.info("running {} (seed {})".format(self.config.experiment, self.seed))
        handler(outcome)
        return outcome

    def tolerance(self, name):
        return self._tolerances[name]

    def value(self, name, default=None, kind='number'):
        res = self.config.value(name, default, kind)
        self.used[name] = res
        return res

    def grid(self):
        if self._grid is None:
            self._grid = self.config.grid()
        return self._grid

    def model(self, *variants):
        spec = self.config.model_spec()
        if variants and spec.variant not in variants:
            raise NotApplicable("{} needs a {} model, got {}".format(
                self.config.experiment, ' or '.join(variants), spec.variant))
        if spec.potential is not None:
            try:
                spec.potential_on(self.grid().n)
            except ShapeError as e:
                raise self.config.error('model.potential', str(e))
        self._spec = spec
        return spec

    def parameters(self):
        """ parameters in effect: the resolved grid and model, run values with their defaults and tolerances """
        res = self.config.echo()
        if self._grid is not None:
            res['grid'] = {'L': self._grid.length, 'n': self._grid.n, 'dx': self._grid.dx}
        if self._spec is not None:
            res['model'] = self._spec.as_dict()
        run = dict(self.config.run_block)
        run.update(self.used)
        run['seed'] = self.seed
        run['tolerances'] = dict(self._tolerances)
        res['run'] = run
        return res

    @staticmethod
    def converged(profile, what):
        """ raises ConvergenceError unless the solver converged """
        if not profile.converged:
            raise ConvergenceError("{} did not converge: residual {:.3g} after {} iterations".format(
                what, profile.residual, profile.iterations), profile)
        return profile

    def initial_field(self, grid, default):
        block = self.value('initial', default, 'object')
        kind = block.get('kind')
        if kind not in initial_fields:
            raise self.config.error('run.initial.kind', "expected one of {}".format(', '.join(sorted(initial_fields))))
        builder, keys = initial_fields[kind]
        params = dict((k, v) for k, v in block.items() if k != 'kind')
        for k, v in params.items():
            if k not in keys:
                raise self.config.error('run.initial.{}'.format(k), "unknown key")
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise self.config.error('run.initial.{}'.format(k), "must be a number")
        if kind == 'random':
            params.setdefault('seed', self.seed)
        try:
            return builder(grid, **params)
        except InvalidArgument as e:
            raise self.config.error('run.initial', str(e))

    def random_fields(self, grid, count):
        """ node-free band-limited fields from run.modes, run.offset, run.scale and the seed """
        modes = self.value('modes', 3, 'integer')
        offset = self.value('offset', 1.0)
        scale = self.value('scale', 0.5)
        rng = np.random.default_rng(self.seed)
        try:
            return [random_field(grid, modes, rng, offset, scale) for _ in range(count)]
        except InvalidArgument as e:
            raise self.config.error('run.modes', str(e))

    def time_steps(self, spec, grid, T):
        """ (dt, n_steps) with dt from run.dt or half the stability limit, adjusted to end at T """
        dt = self.value('dt', None)
        if dt is None:
            dt = 0.5 * stability_limit(spec, grid)
        if not dt > 0 or not T > 0:
            raise self.config.error('run.dt', "dt and T must be positive")
        n_steps = max(1, int(math.ceil(T / dt - 1e-9)))
        return T / n_steps, n_steps

    def run_dispersion(self, outcome):
        """ Plane-wave energies against the predicted dispersion relation """
        spec, grid = self.model(), self.grid()
        qs = self.value('q', [1, 2, 3], 'numbers')
        convention = self.value('convention', 'complex', 'string')
        amplitude = self.value('amplitude', None)
        T = self.value('T', 1.0)
        integrator = self.value('integrator', 'rk4', 'string')
        measurements = []
        outcome.columns = ('q', 'k', 'p_re', 'p_im', 'E_pred_re', 'E_pred_im', 'E_meas_re', 'E_meas_im',
                           'deviation', 'growth_rate', 'frequency')
        for q in qs:
            try:
                res = measure_dispersion(spec, grid, q, amplitude, self.value('dt', None), T, convention, integrator)
            except AliasingError as e:
                raise self.config.error('run.q', str(e))
            p = complex(res.p)
            outcome.rows.append((q, res.k, p.real, p.imag, res.energy_pred.real, res.energy_pred.imag,
                                 res.energy_meas.real, res.energy_meas.imag, res.deviation, res.growth_rate,
                                 res.frequency))
            entry = res.as_dict()
            entry['q'] = q
            measurements.append(entry)
            outcome.check('deviation_q{}'.format(q), res.deviation, self.tolerance('deviation'))
            if convention == 'complex':
                outcome.check('growth_q{}'.format(q), abs(res.growth_rate), self.tolerance('growth'))
        outcome.results['measurements'] = measurements

    def run_evolve(self, outcome):
        """ Time evolution with norm, energy and norm-rate diagnostics """
        spec, grid = self.model(), self.grid()
        psi0 = self.initial_field(grid, {'kind': 'gaussian', 'width': 2.0})
        T = self.value('T', 1.0)
        dt, n_steps = self.time_steps(spec, grid, T)
        config = EvolveConfig(dt, n_steps, self.value('record_every', max(1, n_steps // 100), 'integer'),
                              self.value('integrator', 'rk4', 'string'),
                              keep_fields='fields' in self.config.formats)
        final, records = evolve(spec, psi0, config)
        outcome.columns = DiagnosticsRecord.columns
        outcome.rows = [r.as_row() for r in records]
        outcome.fields = [r.field for r in records if r.field is not None]

        norm0 = records[0].norm2
        drift = max(abs(r.norm2 - norm0) for r in records) / norm0 / T
        rate_error = max(abs(r.norm_rate_numeric - r.norm_rate_analytic) for r in records) / norm0
        outcome.results.update({'dt': dt, 'n_steps': n_steps, 'norm2_initial': norm0, 'norm2_final': final.norm2,
                                'norm_drift_per_time': drift, 'norm_rate_error': rate_error,
                                'energy_qm_final': records[-1].energy_qm, 'energy_ft_final': records[-1].energy_ft})
        outcome.check('norm_drift', drift, self.tolerance('norm_drift'))
        outcome.check('norm_rate', rate_error, self.tolerance('norm_rate'))

    def run_energy_functionals(self, outcome):
        """ Expectation-value energy against the integrated Hamiltonian density """
        spec, grid = self.model(), self.grid()
        fields = [(1 / math.sqrt(f.norm2)) * f for f in self.random_fields(grid, self.value('samples', 10, 'integer'))]
        outcome.columns = ('sample', 'norm2', 'E_qm_re', 'E_qm_im', 'E_ft_re', 'E_ft_im', 'gap_re', 'gap_im',
                           'expected_gap_re', 'expected_gap_im')
        errors = []
        for j, psi in enumerate(fields):
            qm, ft = energy_qm(spec, psi), energy_ft(spec, psi)
            expected = expected_energy_gap(spec, psi)
            errors.append(abs(ft - qm - expected))
            outcome.rows.append((j, psi.norm2, qm.real, qm.imag, ft.real, ft.imag, (ft - qm).real, (ft - qm).imag,
                                 expected.real, expected.imag))
        outcome.results['max_gap_error'] = max(errors)
        outcome.check('gap', max(errors), self.tolerance('gap'))

    def run_homogeneity(self, outcome):
        """ Degree-one homogeneity defect of the model under psi -> lambda psi """
        spec, grid = self.model(), self.grid()
        psi = self.random_fields(grid, 1)[0]
        lambdas = self.value('lambdas', [2.0, 1j, 0.5 + 0.3j], 'complex')
        outcome.columns = ('lambda_re', 'lambda_im', 'defect', 'expected', 'deviation')
        deviations = []
        for lam in lambdas:
            try:
                defect = homogeneity_defect(spec, psi, lam)
            except InvalidArgument as e:
                raise self.config.error('run.lambdas', str(e))
            expected = expected_homogeneity_defect(spec, psi, lam)
            deviation = float(np.max(np.abs(defect.values - expected.values)) / max(1.0, expected.max_abs()))
            deviations.append(deviation)
            outcome.rows.append((lam.real, lam.imag, defect.max_abs(), expected.max_abs(), deviation))
        outcome.results['max_deviation'] = max(deviations)
        outcome.check('defect', max(deviations), self.tolerance('defect'))

    def run_weinberg(self, outcome):
        """ Functional derivative of the energy density against the equation of motion """
        spec, grid = self.model(), self.grid()
        psi = self.random_fields(grid, 1)[0]
        probe = self.value('probe_scale', 1e-6)
        deviation = weinberg_check(spec, psi, probe)
        outcome.columns = ('probe_scale', 'deviation')
        outcome.rows.append((probe, deviation))
        outcome.results['deviation'] = deviation
        outcome.check('weinberg', deviation, self.tolerance('weinberg'))

    def run_soliton_gausson(self, outcome):
        """ Gaussian soliton of the logarithmic model fitted by least squares """
        spec, grid = self.model('log-birula'), self.grid()
        q = self.value('q', 0, 'integer')
        params, profile = fit_gausson(spec, grid, self.value('amplitude', 1.0), grid.wavenumber(q),
                                      self.value('offset', 0.0))
        self.converged(profile, "gausson fit")
        expected_width = 4 * spec.m * spec.b / spec.hbar0 ** 2
        outcome.results.update({'params': params.as_dict(), 'profile': profile.as_dict(),
                                'expected_width': expected_width})
        outcome.check('width', abs(params.width - expected_width), self.tolerance('width'))
        outcome.check('residual', profile.residual, self.tolerance('residual'))
        outcome.columns = ('x', 'F', 'G', 'abs2')
        outcome.rows = list(zip(grid.x, profile.F, profile.G, profile.F ** 2 + profile.G ** 2))

        T = self.value('T', None)
        if T is None and params.speed != 0:
            # one width of travel
            T = 2 / math.sqrt(params.width) / abs(params.speed)
        if T is None:
            return
        dt = self.value('dt', 0.01)
        n_steps = max(1, int(math.ceil(T / dt)))
        final, _ = evolve(spec, gausson_field(grid, params),
                          EvolveConfig(T / n_steps, n_steps, n_steps, self.value('integrator', 'rk4', 'string')))
        expected = gausson_field(grid, params, T).values
        drift = float(np.linalg.norm(final.values - expected) / np.linalg.norm(expected))
        outcome.results.update({'T': T, 'drift': drift})
        outcome.check('drift', drift, self.tolerance('drift'))

    def run_soliton_kinematic(self, outcome):
        """ Kinematic travelling profile by shooting, against the Riccati closed form """
        spec = self.model('kinematic')
        E, p = self.value('E', 0.5), self.value('p', 1.0)
        form = self.value('form', 'printed', 'string')
        profile = shoot_kinematic_profile(spec.m, spec.hbar0, spec.a, E, p, self.value('y_max', 2.0),
                                          form=form, n=self.value('nodes', 48, 'integer'))
        self.converged(profile, "kinematic shooting")
        kappa = kinematic_kappa(spec.m, spec.hbar0, spec.a, E, p)
        rhs, c = riccati_coefficients(spec.m, spec.a, kappa, form)
        closed = np.zeros_like(profile.F)
        inside = ~profile.mask
        closed[inside] = riccati_profile(profile.y[inside], rhs, c)
        deviation = float(np.max(np.abs(profile.F - closed)[inside]))
        ansatz = ansatz_residual(spec, profile)
        outcome.results.update({'kappa': kappa, 'c': c, 'profile': profile.as_dict(),
                                'half_width': profile.domain.half_width,
                                'interior_half_width': (profile.interior or profile).domain.half_width,
                                'closed_form_deviation': deviation,
                                'ansatz_residual': ansatz})
        outcome.check('closed_form', deviation, self.tolerance('closed_form'))
        outcome.check('residual', profile.residual, self.tolerance('residual'))
        if form == 'wave-equation':
            outcome.check('ansatz', ansatz, self.tolerance('ansatz'))
        order = np.argsort(profile.y)
        outcome.columns = ('y', 'F', 'dF', 'F_closed', 'padded')
        outcome.rows = list(zip(profile.y[order], profile.F[order], profile.dF[order], closed[order],
                                profile.mask[order]))

    def run_soliton_fractal(self, outcome):
        """ Complex travelling envelope of the fractal model by collocation and continuation in beta """
        spec = self.model('fractal')
        E, p = self.value('E', 1.5), self.value('p', 1.0)
        steps = self.value('steps', 1, 'integer')
        if steps < 1:
            raise self.config.error('run.steps', "needs at least one continuation step")
        try:
            window = CollocationWindow(self.value('half_width', 0.8), self.value('nodes', 40, 'integer'))
        except InvalidArgument as e:
            raise self.config.error('run.nodes', str(e))
        start = spec.replace(beta=0.0)
        profile = SolitonProfile(window, fractal_profile(start, p, E, window.x).real, p=p, E=E, V=p / spec.m,
                                 hbar_c=start.hbar_eff)
        path = []
        for beta in np.linspace(0.0, spec.beta, steps + 1)[1:]:
            profile = collocation_solve_fractal(spec.replace(beta=float(beta)), p, E, profile)
            self.converged(profile, "fractal collocation at beta={:.6g}".format(beta))
            path.append({'beta': float(beta), 'residual': profile.residual, 'iterations': profile.iterations,
                         'converged': profile.converged})
        closed = fractal_profile(spec, p, E, profile.y)
        deviation = float(np.max(np.abs(profile.envelope - closed)))
        outcome.results.update({'profile': profile.as_dict(), 'continuation': path,
                                'closed_form_deviation': deviation, 'max_abs_G': float(np.max(np.abs(profile.G)))})
        outcome.check('residual', profile.residual, self.tolerance('residual'))
        outcome.check('closed_form', deviation, self.tolerance('closed_form'))
        order = np.argsort(profile.y)
        outcome.columns = ('y', 'F', 'G', 'F_closed', 'G_closed')
        outcome.rows = list(zip(profile.y[order], profile.F[order], profile.G[order], closed.real[order],
                                closed.imag[order]))

    def run_linearize(self, outcome):
        """ Map of nabla2log solutions to linear ones with the sign oracle and the round trip """
        spec, grid = self.model('nabla2log'), self.grid()
        psi0 = self.initial_field(grid, {'kind': 'periodic', 'concentration': 1.0, 'twist': 0.5})
        sign, residuals = select_nabla2log_sign(spec, psi0, self.value('dt', 1e-3), self.value('T', 0.2))
        trip = round_trip_error(psi0, spec.hbar0, spec.hbar_second, spec.floor)
        outcome.results.update({'sign': sign, 'residuals': dict((str(k), v) for k, v in residuals.items()),
                                'round_trip': trip})
        outcome.check('residual', residuals[sign], self.tolerance('residual'))
        outcome.check('round_trip', trip, self.tolerance('round_trip'))
        outcome.columns = ('sign', 'residual')
        outcome.rows = [(s, residuals[s]) for s in (1, -1)]

    def run_wiener_scaling(self, outcome):
        """ Mean squared velocity of Wiener paths against the time resolution """
        dts = self.value('dt_list', list(np.logspace(-3, -1, 5)), 'numbers')
        try:
            est = wiener_velocity_scaling(self.value('diffusion', 0.5), np.array(dts, dtype=float),
                                          self.value('n_samples', 10 ** 5, 'integer'), self.seed,
                                          self.value('n_batches', 20, 'integer'),
                                          self.value('workers', None, 'integer'))
        except InvalidArgument as e:
            raise ConfigError(str(e), 'run')
        outcome.results.update(est.as_dict())
        outcome.check('slope', abs(est.slope + 1.0), self.tolerance('slope'))
        outcome.columns = ('dt', 'mean_square_velocity', 'standard_error', 'mean_displacement')
        outcome.rows = list(zip(est.dts, est.mean_square_velocity, est.standard_errors, est.mean_displacement))

    def run_fractal_function(self, outcome):
        """ Scale-dependent fractal function across resolutions and its scale exponent """
        try:
            params = FractalFunctionParams(self.value('f0', 1.0), self.value('zeta', 1.0), self.value('scale', 1.0),
                                           self.value('b_rg', -1.0))
        except InvalidArgument as e:
            raise ConfigError(str(e), 'run')
        epsilons = self.value('epsilons', list(params.scale * np.logspace(-3, 3, 13)), 'numbers')
        x = np.array(self.value('x', [0.0], 'numbers'), dtype=float)
        outcome.columns = ('epsilon',) + tuple('f_{}'.format(j) for j in range(x.size)) + ('regime',)
        for eps in epsilons:
            values, regime = fractal_function_eval(x, eps, params)
            outcome.rows.append((eps,) + tuple(values) + (regime,))
        exponent = scale_exponent(params, params.scale * np.logspace(-12, -10, 5), float(x[0]))
        outcome.results.update({'scale_exponent': exponent, 'b_rg': params.b_rg,
                                'regimes': sorted(set(row[-1] for row in outcome.rows))})
        outcome.check('exponent', abs(exponent + params.b_rg), self.tolerance('exponent'))
