import math
import unittest

import numpy as np

from ..exceptions import AliasingError, InvalidArgument, NotApplicable
from ..field import make_grid, gradient
from ..models import ModelSpec
from . import carrier, plane_wave, predicted_dispersion, measure_dispersion


class TestPlaneWave(unittest.TestCase):

    def test_constant(self):
        f = plane_wave(make_grid(2 * math.pi, 16), 0, 2.0)
        self.assertTrue(np.all(f.values == 2.0))

    def test_gradient(self):
        f = plane_wave(make_grid(2 * math.pi, 16), 3)
        self.assertLess(np.max(np.abs(gradient(f).values - 3j * f.values)), 1e-12)

    def test_aliasing(self):
        self.assertRaises(AliasingError, plane_wave, make_grid(2 * math.pi, 16), 8)
        self.assertRaises(AliasingError, plane_wave, make_grid(2 * math.pi, 16), -8)


class TestPredictedDispersion(unittest.TestCase):

    def test_fractal(self):
        spec = ModelSpec('fractal', alpha=1.0, beta=0.25)
        self.assertEqual(predicted_dispersion(spec, 2.0), 2.0)

    def test_fractal_complex_label(self):
        # p = hbar k with complex hbar: E = hbar**2 k**2 / 2m
        spec = ModelSpec('fractal', alpha=1.0, beta=0.25)
        k = 2.0
        self.assertAlmostEqual(predicted_dispersion(spec, spec.hbar_eff * k), (1 + 0.25j) ** 2 * 2.0, places=14)

    def test_kinematic(self):
        self.assertEqual(predicted_dispersion(ModelSpec('kinematic', a=0.5), 1.0), 0.75)

    def test_log_birula(self):
        e = predicted_dispersion(ModelSpec('log-birula', b=0.1), 1.0)
        self.assertAlmostEqual(e, 0.5 + 0.1 * math.log(2 * math.pi), places=14)
        self.assertAlmostEqual(e, 0.6837877, places=7)
        unit = predicted_dispersion(ModelSpec('log-birula', b=0.1), 1.0, amplitude=1.0)
        self.assertEqual(unit, 0.5)

    def test_potential(self):
        spec = ModelSpec('linear', potential=np.linspace(0, 1, 16))
        self.assertRaises(NotApplicable, predicted_dispersion, spec, 1.0)
        spec = ModelSpec('linear', potential=np.full(16, 0.25))
        self.assertEqual(predicted_dispersion(spec, 1.0), 0.75)


class TestMeasureDispersion(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(2 * math.pi * 8, 256)

    def test_fractal_real_energy(self):
        for beta in (0.05, 0.1, 0.2):
            spec = ModelSpec('fractal', alpha=1.0, beta=beta)
            for q in (1, 2, 3):
                res = measure_dispersion(spec, self.grid, q)
                energy = self.grid.wavenumber(q) ** 2 / 2
                self.assertEqual(res.energy_pred, energy)
                self.assertLess(abs(res.growth_rate), 1e-8, (beta, q))
                self.assertLess(abs(spec.hbar0 * res.frequency - energy) / energy, 1e-6, (beta, q))
                self.assertLess(res.deviation, 1e-6, (beta, q))
                self.assertLess(res.shape_deviation, 1e-6)

    def test_fractal_norm_is_constant(self):
        spec = ModelSpec('fractal', alpha=1.0, beta=0.2)
        _, kappa, _ = carrier(spec, self.grid.wavenumber(2))
        self.assertNotEqual(kappa.imag, 0)
        self.assertLess(abs((spec.hbar_eff * kappa ** 2).imag), 1e-15)

    def test_fractal_hbar0(self):
        spec = ModelSpec('fractal', hbar0=2.0, alpha=1.5, beta=0.3)
        res = measure_dispersion(spec, self.grid, 2)
        self.assertEqual(res.p, 2.0 * self.grid.wavenumber(2))
        self.assertLess(abs(res.growth_rate), 1e-8)
        self.assertLess(res.deviation, 1e-6)

    def test_fractal_real_wavenumber(self):
        beta = 0.2
        spec = ModelSpec('fractal', alpha=1.0, beta=beta)
        res = measure_dispersion(spec, self.grid, 2, convention='real')
        k = self.grid.wavenumber(2)
        self.assertLess(res.deviation, 1e-6)
        self.assertAlmostEqual(res.growth_rate, beta * k ** 2 / 2, places=9)

    def test_linear(self):
        res = measure_dispersion(ModelSpec('linear'), self.grid, 3)
        k = self.grid.wavenumber(3)
        self.assertLess(abs(res.frequency - k ** 2 / 2) / (k ** 2 / 2), 1e-8)
        self.assertLess(abs(res.growth_rate), 1e-10)

    def test_zero_energy(self):
        res = measure_dispersion(ModelSpec('linear'), self.grid, 0)
        self.assertEqual(res.energy_pred, 0)
        self.assertLess(res.deviation, 1e-12)

    def test_kinematic(self):
        res = measure_dispersion(ModelSpec('kinematic', a=0.5), self.grid, 8, amplitude=1.0)
        self.assertEqual(res.k, 1.0)
        self.assertLess(abs(res.energy_meas - 0.75), 1e-6)
        for q in (1, 2, 3):
            res = measure_dispersion(ModelSpec('kinematic', a=0.5), self.grid, q, amplitude=1.0)
            energy = 0.75 * self.grid.wavenumber(q) ** 2
            self.assertLess(abs(res.energy_meas - energy) / energy, 1e-6, q)

    def test_log_birula(self):
        res = measure_dispersion(ModelSpec('log-birula', b=0.1), self.grid, 8)
        self.assertLess(abs(res.energy_meas - (0.5 + 0.1 * math.log(2 * math.pi))), 1e-6)
        for q in (1, 2, 3):
            res = measure_dispersion(ModelSpec('log-birula', b=0.1), self.grid, q)
            energy = self.grid.wavenumber(q) ** 2 / 2 + 0.1 * math.log(2 * math.pi)
            self.assertLess(abs(res.energy_meas - energy) / energy, 1e-6, q)
            self.assertLess(abs(res.growth_rate), 1e-8, q)

    def test_other_variants(self):
        for spec in (ModelSpec('cubic-gp', g=1.0), ModelSpec('nabla2log', hbar_second=2.0),
                     ModelSpec('hydro-combined', a=0.5, b=0.1)):
            for q in (1, 2, 3):
                res = measure_dispersion(spec, self.grid, q)
                self.assertLess(res.deviation, 1e-6, (spec.variant, q))

    def test_aliasing(self):
        self.assertRaises(AliasingError, measure_dispersion, ModelSpec('linear'), self.grid, 128)
        self.assertRaises(InvalidArgument, measure_dispersion, ModelSpec('linear'), self.grid, 1,
                          convention='imaginary')
