import cmath
import math
import unittest

import numpy as np

from ..exceptions import BlowUpError, DegenerateFieldError, InvalidArgument, StabilityError
from ..field import WaveField, make_grid, gaussian_packet, random_field
from ..models import ModelSpec
from . import step_rk4, step_split, evolve, EvolveConfig, norm_rate_check


def run(spec, psi, dt, n_steps, integrator='rk4', record_every=None):
    config = EvolveConfig(dt, n_steps, record_every=record_every or n_steps, integrator=integrator)
    return evolve(spec, psi, config)


class TestRK4(unittest.TestCase):

    def test_plane_wave_phase(self):
        grid = make_grid(2 * math.pi, 32)
        psi = WaveField(grid, np.exp(3j * grid.x))
        final, _ = run(ModelSpec('linear'), psi, 0.001, 1000)
        expected = np.exp(-1j * 4.5 * 1.0) * psi.values
        self.assertLess(np.max(np.abs(final.values - expected)), 1e-8)

    def test_order(self):
        grid = make_grid(40.0, 64)
        spec = ModelSpec('cubic-gp', g=1.0)
        psi = gaussian_packet(grid, width=2.0)
        reference, _ = run(spec, psi, 0.1 / 16, 2 * 160)
        errors = []
        for dt in (0.1, 0.05, 0.025):
            final, _ = run(spec, psi, dt, int(round(2.0 / dt)))
            errors.append(np.max(np.abs(final.values - reference.values)))
        for i in range(2):
            order = math.log2(errors[i] / errors[i + 1])
            self.assertTrue(3.7 <= order <= 4.3, (order, errors))

    def test_guard(self):
        grid = make_grid(2 * math.pi, 64)
        psi = WaveField(grid, np.ones(64))
        self.assertRaises(StabilityError, step_rk4, ModelSpec('linear'), psi, 0.1)
        self.assertRaises(StabilityError, step_split, ModelSpec('linear'), psi, 0.1)
        self.assertRaises(InvalidArgument, step_rk4, ModelSpec('linear'), psi, -0.001)


class TestSplitStep(unittest.TestCase):

    def test_linear_exact(self):
        grid = make_grid(2 * math.pi, 32)
        psi = WaveField(grid, np.exp(2j * grid.x) + 0.5 * np.exp(-5j * grid.x))
        final, _ = run(ModelSpec('linear'), psi, 0.01, 50, 'split-step')
        t = 0.5
        expected = np.exp(2j * grid.x - 2j * t) + 0.5 * np.exp(-5j * grid.x - 12.5j * t)
        self.assertLess(np.max(np.abs(final.values - expected)), 1e-12)

    def test_agrees_with_rk4(self):
        grid = make_grid(40.0, 64)
        spec = ModelSpec('fractal', alpha=1.0, beta=0.05)
        psi = gaussian_packet(grid, width=2.0)
        diffs = []
        for dt in (0.1, 0.05):
            n = int(round(1.0 / dt))
            a, _ = run(spec, psi, dt, n, 'rk4')
            b, _ = run(spec, psi, dt, n, 'split-step')
            diffs.append(np.max(np.abs(a.values - b.values)))
        ratio = diffs[0] / diffs[1]
        self.assertTrue(3.0 <= ratio <= 5.0, (ratio, diffs))

    def test_cubic_norm(self):
        grid = make_grid(40.0, 64)
        spec = ModelSpec('cubic-gp', g=-1.0)
        psi = gaussian_packet(grid, width=2.0)
        final, _ = run(spec, psi, 0.001, 1000, 'split-step')
        self.assertLess(abs(final.norm2 - psi.norm2) / psi.norm2, 1e-10)


class TestEvolve(unittest.TestCase):

    def test_records(self):
        grid = make_grid(2 * math.pi, 16)
        psi = WaveField(grid, np.ones(16))
        _, records = run(ModelSpec('linear'), psi, 0.001, 25, record_every=10)
        self.assertEqual([r.step for r in records], [0, 10, 20, 25])
        self.assertAlmostEqual(records[-1].t, 0.025, places=15)

    def test_linear_conservation(self):
        grid = make_grid(40.0, 64)
        psi = gaussian_packet(grid, width=2.0, q=1)
        final, records = run(ModelSpec('linear'), psi, 0.01, 10000, record_every=1000)
        self.assertLess(abs(final.norm2 - psi.norm2) / psi.norm2, 1e-10)
        energies = [r.energy_qm for r in records]
        self.assertLess(max(abs(e - energies[0]) for e in energies), 1e-9)

    def test_hermitian_variants(self):
        grid = make_grid(2 * math.pi, 32)
        psi = random_field(grid, modes=2, seed=8, offset=1.0, scale=0.3)
        for spec in (ModelSpec('linear'), ModelSpec('log-birula', b=0.1), ModelSpec('kinematic', a=0.5),
                     ModelSpec('hydro-combined', a=0.5, b=0.1), ModelSpec('cubic-gp', g=1.0)):
            final, _ = run(spec, psi, 0.001, 1000)
            drift = abs(final.norm2 - psi.norm2) / psi.norm2
            self.assertLess(drift, 1e-9, spec.variant)

    def test_fractal_plane_wave_growth(self):
        # a real wavenumber is not an eigenstate of the imaginary potential: |psi|**2 grows at beta k**2/m
        grid = make_grid(2 * math.pi, 32)
        beta, k = 0.1, 2.0
        psi = WaveField(grid, np.exp(1j * k * grid.x))
        final, records = run(ModelSpec('fractal', alpha=1.0, beta=beta), psi, 0.001, 500, record_every=100)
        expected = psi.norm2 * math.exp(beta * k ** 2 * 0.5)
        self.assertLess(abs(final.norm2 - expected) / expected, 1e-9)
        self.assertLess(abs(records[0].norm_rate_analytic - beta * k ** 2 * psi.norm2), 1e-10)

    def test_blow_up_factor(self):
        grid = make_grid(2 * math.pi, 32)
        psi = WaveField(grid, np.exp(2j * grid.x))
        config = EvolveConfig(0.01, 200, blowup_factor=1.5)
        with self.assertRaises(BlowUpError) as ctx:
            evolve(ModelSpec('fractal', alpha=1.0, beta=1.0), psi, config)
        self.assertGreater(ctx.exception.step, 0)
        self.assertEqual(ctx.exception.t, ctx.exception.step * 0.01)
        self.assertIn('at step {}'.format(ctx.exception.step), str(ctx.exception))

    def test_failure_time(self):
        grid = make_grid(2 * math.pi, 32)
        psi = WaveField(grid, np.zeros(grid.n))
        with self.assertRaises(DegenerateFieldError) as ctx:
            evolve(ModelSpec('log-birula', b=0.1), psi, EvolveConfig(0.01, 5))
        self.assertEqual(ctx.exception.step, 0)
        self.assertEqual(ctx.exception.t, 0.0)
        self.assertTrue(str(ctx.exception).endswith('at step 0 (t=0.0)'))


class TestNormRate(unittest.TestCase):

    def test_linear(self):
        grid = make_grid(2 * math.pi, 64)
        psi = random_field(grid, modes=5, seed=3)
        psi = (1 / math.sqrt(psi.norm2)) * psi
        rate, parts = norm_rate_check(ModelSpec('linear'), psi)
        self.assertLess(abs(rate), 1e-12)

    def test_fractal_plane_wave_source(self):
        grid = make_grid(2 * math.pi, 32)
        beta, k = 0.2, 3.0
        psi = WaveField(grid, np.exp(1j * k * grid.x))
        rate, parts = norm_rate_check(ModelSpec('fractal', alpha=1.0, beta=beta), psi)
        self.assertLess(abs(parts['kinetic']), 1e-10)
        self.assertLess(abs(parts['nonlinear'] - beta * k ** 2 * psi.norm2), 1e-10)
        self.assertLess(abs(rate - parts['nonlinear']), 1e-10)

    def test_fractal_real_energy_plane_wave(self):
        grid = make_grid(2 * math.pi, 32)
        spec = ModelSpec('fractal', alpha=1.0, beta=0.2)
        k = 3.0
        # hbar_eff kappa**2 = k**2 is real
        kappa = k / cmath.sqrt(spec.hbar_eff)
        psi = WaveField(grid, np.ones(grid.n), kappa)
        rate, parts = norm_rate_check(spec, psi)
        self.assertLess(abs(rate), 1e-10 * psi.norm2)
        self.assertGreater(abs(parts['kinetic']), 1e-2 * psi.norm2)
        self.assertLess(abs(parts['kinetic'] + parts['nonlinear']), 1e-10 * psi.norm2)

    def test_fractal_gaussian_matches_evolution(self):
        grid = make_grid(40.0, 64)
        spec = ModelSpec('fractal', alpha=1.0, beta=0.2)
        psi = gaussian_packet(grid, width=2.0)
        rate, _ = norm_rate_check(spec, psi)
        self.assertGreater(abs(rate), 1e-3)
        _, records = run(spec, psi, 0.002, 20, record_every=1)
        self.assertEqual(records[0].norm_rate_analytic, rate)
        middle = records[10]
        self.assertLess(abs(middle.norm_rate_numeric - middle.norm_rate_analytic), 1e-6)
