import math
import unittest

import numpy as np

from ..exceptions import DegenerateFieldError, InvalidArgument, NotApplicable, ShapeError
from ..field import WaveField, make_grid, random_field, gaussian_packet
from . import ModelSpec, time_derivative, homogeneity_defect, expected_homogeneity_defect, log_identity_check, \
    models_by_variant, energy_qm, energy_ft


def energy_gap(spec, psi):
    return energy_ft(spec, psi) - energy_qm(spec, psi)


class TestModelSpec(unittest.TestCase):

    def test_registry(self):
        self.assertEqual(sorted(models_by_variant), sorted(['linear', 'log-birula', 'kinematic', 'hydro-combined',
                                                            'fractal', 'cubic-gp', 'nabla2log']))

    def test_validation(self):
        self.assertRaises(InvalidArgument, ModelSpec, 'linear', m=0)
        self.assertRaises(InvalidArgument, ModelSpec, 'linear', hbar0=-1)
        self.assertRaises(InvalidArgument, ModelSpec, 'fractal', alpha=0)
        self.assertRaises(InvalidArgument, ModelSpec, 'nabla2log', sign=0)
        self.assertRaises(InvalidArgument, ModelSpec, 'cubic', g=1)

    def test_replace(self):
        s = ModelSpec('fractal', beta=0.1)
        self.assertEqual(s.replace(beta=0.1), s)
        self.assertEqual(s.replace(beta=0.2).beta, 0.2)

    def test_potential_shape(self):
        g = make_grid(1.0, 16)
        spec = ModelSpec('linear', potential=np.zeros(8))
        self.assertRaises(ShapeError, time_derivative, spec, WaveField(g, np.ones(16)))


class TestTimeDerivative(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(16 * math.pi, 256)

    def test_fractal_reduces_to_linear(self):
        fractal = ModelSpec('fractal', alpha=1.0, beta=0.0)
        linear = ModelSpec('linear')
        for seed in range(10):
            psi = random_field(self.grid, modes=8, seed=seed, offset=1.0, scale=0.8)
            a = time_derivative(fractal, psi).dpsi_dt.values
            b = time_derivative(linear, psi).dpsi_dt.values
            self.assertLess(np.max(np.abs(a - b)), 1e-12)

    def test_linear_plane_wave(self):
        k = self.grid.wavenumber(3)
        psi = WaveField(self.grid, np.exp(1j * k * self.grid.x))
        out = time_derivative(ModelSpec('linear'), psi)
        self.assertLess(np.max(np.abs(out.dpsi_dt.values + 1j * k ** 2 / 2 * psi.values)), 1e-12)

    def test_log_birula_plane_wave(self):
        k = self.grid.wavenumber(2)
        spec = ModelSpec('log-birula', b=0.1)
        unit = WaveField(self.grid, np.exp(1j * k * self.grid.x))
        out = time_derivative(spec, unit)
        self.assertLess(np.max(np.abs(out.h_action.values - k ** 2 / 2 * unit.values)), 1e-12)
        double = 2 * unit
        out = time_derivative(spec, double)
        expected = (k ** 2 / 2 - 0.1 * math.log(4)) * double.values
        self.assertLess(np.max(np.abs(out.h_action.values - expected)), 1e-12)
        self.assertAlmostEqual(0.1 * math.log(4), 0.138629, places=6)

    def test_output_consistency(self):
        psi = random_field(self.grid, modes=6, seed=42, offset=1.2)
        for variant in models_by_variant:
            spec = ModelSpec(variant, alpha=1.0, beta=0.3, a=0.5, b=0.1, g=1.0, hbar_second=1.5)
            out = time_derivative(spec, psi)
            diff = out.h_action.values - 1j * spec.hbar_eff * out.dpsi_dt.values
            self.assertLess(np.max(np.abs(diff)), 1e-12, variant)

    def test_degenerate(self):
        psi = WaveField(self.grid, np.zeros(self.grid.n))
        self.assertRaises(DegenerateFieldError, time_derivative, ModelSpec('kinematic', a=1), psi)

    def test_complex_carrier(self):
        psi = WaveField(self.grid, np.ones(self.grid.n), 0.2 - 0.05j)
        self.assertRaises(NotApplicable, time_derivative, ModelSpec('log-birula', b=0.1), psi)
        out = time_derivative(ModelSpec('fractal', beta=0.2), psi)
        self.assertTrue(np.all(np.isfinite(out.dpsi_dt.values)))

    def test_nabla2log_plane_wave(self):
        k = self.grid.wavenumber(2)
        psi = WaveField(self.grid, np.exp(1j * k * self.grid.x))
        a = time_derivative(ModelSpec('nabla2log', hbar_second=2.0), psi).dpsi_dt.values
        b = time_derivative(ModelSpec('linear'), psi).dpsi_dt.values
        self.assertLess(np.max(np.abs(a - b)), 1e-10)


class TestHamiltonianDensity(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(16 * math.pi, 256)

    def normalized(self, seed):
        psi = random_field(self.grid, modes=6, seed=seed, offset=1.0, scale=0.7)
        return (1 / math.sqrt(psi.norm2)) * psi

    def test_log_birula_gap(self):
        spec = ModelSpec('log-birula', b=0.1)
        gaps = [energy_gap(spec, self.normalized(seed)) for seed in range(10)]
        for gap in gaps:
            self.assertLess(abs(gap - 0.1), 1e-8)
        self.assertLess(np.ptp(np.real(gaps)), 1e-8)

    def test_log_birula_gap_scales_with_norm(self):
        spec = ModelSpec('log-birula', b=0.2)
        psi = 3 * self.normalized(1)
        self.assertLess(abs(energy_gap(spec, psi) - 0.2 * psi.norm2), 1e-8)

    def test_fractal_no_gap(self):
        spec = ModelSpec('fractal', alpha=1.0, beta=0.3)
        for seed in range(3):
            self.assertLess(abs(energy_gap(spec, self.normalized(seed))), 1e-12)

    def test_linear_no_gap(self):
        self.assertLess(abs(energy_gap(ModelSpec('linear'), self.normalized(4))), 1e-12)

    def test_cubic_gap(self):
        spec = ModelSpec('cubic-gp', g=1.0)
        psi = gaussian_packet(self.grid, width=2.0)
        quartic = np.sum(np.abs(psi.values) ** 4) * self.grid.dx
        self.assertLess(abs(energy_gap(spec, psi) + 0.5 * quartic), 1e-8)


class TestHomogeneity(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(16 * math.pi, 256)
        self.psi = random_field(self.grid, modes=6, seed=9, offset=1.0, scale=0.8)

    def test_homogeneous_variants(self):
        for spec in (ModelSpec('fractal', alpha=1.0, beta=0.2), ModelSpec('kinematic', a=0.5),
                     ModelSpec('nabla2log', hbar_second=1.5)):
            for lam in (2, 1j, 0.5 + 0.3j):
                defect = homogeneity_defect(spec, self.psi, lam)
                self.assertLess(np.max(np.abs(defect.values)), 1e-10, (spec, lam))

    def test_log_birula_closed_form(self):
        b = 0.1
        spec = ModelSpec('log-birula', b=b)
        for lam in (2, 1j, 0.5 + 0.3j):
            defect = homogeneity_defect(spec, self.psi, lam)
            expected = -(b / 1j) * math.log(abs(lam) ** 2) * lam * self.psi.values
            self.assertLess(np.max(np.abs(defect.values - expected)), 1e-10)

    def test_expected_defect(self):
        for spec in (ModelSpec('log-birula', b=0.1), ModelSpec('hydro-combined', a=0.5, b=0.2),
                     ModelSpec('cubic-gp', g=1.0), ModelSpec('kinematic', a=0.5)):
            for lam in (2, 1j, 0.5 + 0.3j):
                defect = homogeneity_defect(spec, self.psi, lam)
                expected = expected_homogeneity_defect(spec, self.psi, lam)
                scale = max(1.0, expected.max_abs())
                self.assertLess(np.max(np.abs(defect.values - expected.values)) / scale, 1e-10, (spec, lam))

    def test_zero_lambda(self):
        self.assertRaises(InvalidArgument, homogeneity_defect, ModelSpec('linear'), self.psi, 0)


class TestLogIdentity(unittest.TestCase):

    def test_plane_wave(self):
        g = make_grid(2 * math.pi, 64)
        self.assertLess(log_identity_check(WaveField(g, np.exp(3j * g.x))), 1e-12)

    def test_random(self):
        g = make_grid(2 * math.pi, 128)
        psi = random_field(g, modes=2, seed=21, offset=1.0, scale=0.3)
        self.assertLess(log_identity_check(psi), 1e-9)

    def test_real_positive(self):
        g = make_grid(2 * math.pi, 64)
        psi = WaveField(g, 2 + np.cos(g.x))
        self.assertLess(log_identity_check(psi), 1e-15)

    def test_node(self):
        g = make_grid(2 * math.pi, 64)
        self.assertRaises(DegenerateFieldError, log_identity_check, WaveField(g, np.sin(g.x)))
