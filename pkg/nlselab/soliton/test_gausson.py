import math
import unittest

import numpy as np

from ..evolution import EvolveConfig, evolve
from ..exceptions import AliasingError, NotApplicable
from ..field import make_grid
from ..models import ModelSpec
from . import fit_gausson, gausson_field, gausson_profile, gausson_solution, ansatz_residual, GaussonParams


class TestGaussonFit(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(2 * math.pi * 8, 256)

    def test_width_law(self):
        bs = (0.05, 0.1, 0.2, 0.4)
        widths = []
        for b in bs:
            params, profile = fit_gausson(ModelSpec('log-birula', b=b), self.grid)
            self.assertTrue(profile.converged, b)
            self.assertLess(abs(params.width - 4 * b), 1e-6)
            self.assertLess(profile.residual, 1e-8)
            widths.append(params.width)
        slope = np.polyfit(bs, widths, 1)[0]
        self.assertLess(abs(slope - 4.0) / 4.0, 1e-4)

    def test_mass_and_hbar(self):
        params, _ = fit_gausson(ModelSpec('log-birula', b=0.1, m=2.0, hbar0=2.0), self.grid)
        self.assertLess(abs(params.width - 0.2), 1e-6)

    def test_moving(self):
        k = self.grid.wavenumber(8)
        spec = ModelSpec('log-birula', b=0.1)
        params, profile = fit_gausson(spec, self.grid, wavenumber=k)
        self.assertTrue(profile.converged)
        self.assertEqual(params.speed, k)
        self.assertLess(abs(params.omega - (k ** 2 / 2 + 0.1)), 1e-6)

    def test_no_gausson_without_log_term(self):
        with self.assertLogs(level='WARNING'):
            _, profile = fit_gausson(ModelSpec('log-birula', b=0.0), self.grid)
        self.assertFalse(profile.converged)

    def test_variant(self):
        self.assertRaises(NotApplicable, fit_gausson, ModelSpec('linear'), self.grid)
        self.assertRaises(AliasingError, fit_gausson, ModelSpec('log-birula', b=0.1), self.grid, wavenumber=0.3)


class TestGaussonField(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(2 * math.pi * 8, 256)
        self.spec = ModelSpec('log-birula', b=0.1)

    def test_peak(self):
        field = gausson_field(self.grid, GaussonParams(1.5, 0.4))
        self.assertEqual(field.max_abs(), 1.5)
        self.assertEqual(np.argmax(np.abs(field.values)), 0)

    def test_translation(self):
        params = gausson_solution(self.spec, wavenumber=self.grid.wavenumber(8))
        self.assertEqual(params.speed, 1.0)
        t = 5 * self.grid.dx / params.speed
        later = np.abs(gausson_field(self.grid, params, t).values)
        earlier = np.abs(gausson_field(self.grid, params).values)
        self.assertLess(np.max(np.abs(later - np.roll(earlier, 5))), 1e-8)

    def test_ansatz_residual(self):
        params = gausson_solution(self.spec, wavenumber=self.grid.wavenumber(8))
        profile = gausson_profile(self.spec, self.grid, params)
        self.assertLess(ansatz_residual(self.spec, profile, (0.0, 0.5, 1.7)), 1e-8)

    def test_perturbed_profile(self):
        profile = gausson_profile(self.spec, self.grid, gausson_solution(self.spec))
        perturbed = profile.replace(F=1.01 * profile.F)
        self.assertGreater(ansatz_residual(self.spec, perturbed), 1e-3)

    def test_evolution_keeps_shape(self):
        params = gausson_solution(self.spec, wavenumber=self.grid.wavenumber(8))
        travel = 2 / math.sqrt(params.width)
        T = travel / params.speed
        n_steps = int(math.ceil(T / 0.01))
        final, _ = evolve(self.spec, gausson_field(self.grid, params),
                          EvolveConfig(T / n_steps, n_steps, record_every=n_steps))
        expected = gausson_field(self.grid, params, T).values
        drift = np.linalg.norm(final.values - expected) / np.linalg.norm(expected)
        self.assertLess(drift, 1e-4)
