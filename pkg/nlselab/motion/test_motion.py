import math
import unittest

import numpy as np

from ..exceptions import InvalidArgument
from . import wiener_velocity_scaling, FractalFunctionParams, fractal_function_eval, scale_exponent


class TestWienerScaling(unittest.TestCase):

    dts = np.logspace(-3, -1, 5)

    def test_slope(self):
        est = wiener_velocity_scaling(0.5, self.dts, 10 ** 5, seed=7)
        self.assertLess(abs(est.slope + 1.0), 0.02)
        self.assertLess(abs(est.fractal_dimension - 2.0), 0.05)
        self.assertEqual(len(est.pairs), 5)
        self.assertLess(np.max(np.abs(est.mean_square_velocity * self.dts - 1.0)), 0.05)

    def test_zero_mean(self):
        est = wiener_velocity_scaling(0.5, self.dts, 10 ** 5, seed=11)
        self.assertLess(np.max(np.abs(est.mean_displacement)), 4 / math.sqrt(10 ** 5))

    def test_reproducible(self):
        first = wiener_velocity_scaling(0.5, self.dts, 10 ** 4, seed=3)
        second = wiener_velocity_scaling(0.5, self.dts, 10 ** 4, seed=3, workers=3)
        self.assertEqual(first.slope, second.slope)
        self.assertTrue(np.array_equal(first.mean_square_velocity, second.mean_square_velocity))
        other = wiener_velocity_scaling(0.5, self.dts, 10 ** 4, seed=4)
        self.assertNotEqual(first.slope, other.slope)

    def test_error_shrinks(self):
        coarse = wiener_velocity_scaling(0.5, self.dts, 10 ** 4, seed=5)
        fine = wiener_velocity_scaling(0.5, self.dts, 10 ** 6, seed=5)
        self.assertTrue(5 < coarse.half_width / fine.half_width < 20)

    def test_invalid(self):
        self.assertRaises(InvalidArgument, wiener_velocity_scaling, 0.5, [0.01], 10 ** 4)
        self.assertRaises(InvalidArgument, wiener_velocity_scaling, 0.5, [0.01, 0.01, 0.01], 10 ** 4)
        self.assertRaises(InvalidArgument, wiener_velocity_scaling, 0.5, [0.01, 0.1], 10 ** 4)
        self.assertRaises(InvalidArgument, wiener_velocity_scaling, 0.5, self.dts, 100)
        self.assertRaises(InvalidArgument, wiener_velocity_scaling, 0.0, self.dts, 10 ** 4)


class TestFractalFunction(unittest.TestCase):

    def test_transition_scale(self):
        values, _ = fractal_function_eval([0.0, 1.0], 2.0, FractalFunctionParams(f0=3.0, zeta=1.0, scale=2.0))
        self.assertTrue(np.allclose(values, 6.0))

    def test_scale_independent(self):
        values, regime = fractal_function_eval([0.0], 1e3, FractalFunctionParams())
        self.assertAlmostEqual(values[0] - 1.0, 1e-3, places=15)
        self.assertEqual(regime, 'scale-independent')

    def test_scale_dependent(self):
        params = FractalFunctionParams()
        values, regime = fractal_function_eval([0.0], 1e-3, params)
        self.assertAlmostEqual(values[0], 1001.0, places=9)
        self.assertEqual(regime, 'scale-dependent')
        self.assertLess(abs(scale_exponent(params, np.logspace(-6, -4, 5)) - 1.0), 1e-3)

    def test_exponent(self):
        params = FractalFunctionParams(zeta=0.5, scale=0.1, b_rg=-0.5)
        self.assertLess(abs(scale_exponent(params, 0.1 * np.logspace(-12, -10, 5)) - 0.5), 1e-3)

    def test_position_dependent(self):
        params = FractalFunctionParams(f0=lambda x: 1 + x ** 2, zeta=lambda x: 0.01 + x)
        values, regime = fractal_function_eval(np.array([0.0, 100.0]), 1.0, params)
        self.assertTrue(np.allclose(values, [1.01, 10001.0 * 101.01], rtol=1e-14))
        self.assertEqual(regime, 'crossover')

    def test_invalid(self):
        self.assertRaises(InvalidArgument, fractal_function_eval, [0.0], 0.0, FractalFunctionParams())
        self.assertRaises(InvalidArgument, FractalFunctionParams, scale=0.0)
        self.assertRaises(InvalidArgument, FractalFunctionParams, b_rg=1.0)
