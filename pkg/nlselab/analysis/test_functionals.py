import math
import unittest

import numpy as np

from ..exceptions import NotApplicable
from ..field import make_grid, random_field
from ..models import ModelSpec, hamiltonian_density
from . import weinberg_check, energy_qm, energy_ft, expected_energy_gap


class TestEnergyFunctionals(unittest.TestCase):

    def test_log_birula_constant_gap(self):
        grid = make_grid(2 * math.pi * 8, 256)
        spec = ModelSpec('log-birula', b=0.1)
        gaps = []
        for seed in range(10):
            psi = random_field(grid, modes=5, seed=seed, offset=1.0, scale=0.5)
            psi = (1 / math.sqrt(psi.norm2)) * psi
            gaps.append(energy_ft(spec, psi) - energy_qm(spec, psi))
        self.assertLess(max(abs(g - 0.1) for g in gaps), 1e-8)

    def test_imaginary_part_reported(self):
        grid = make_grid(2 * math.pi, 64)
        psi = random_field(grid, modes=3, seed=2, offset=1.0, scale=0.5)
        e = energy_qm(ModelSpec('fractal', alpha=1.0, beta=0.3), psi)
        self.assertNotEqual(e.imag, 0.0)


class TestWeinbergCheck(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(2 * math.pi, 64)
        self.psi = random_field(self.grid, modes=3, seed=12, offset=1.0, scale=0.5)

    def test_linear(self):
        self.assertLess(weinberg_check(ModelSpec('linear'), self.psi), 1e-6)

    def test_log_birula(self):
        self.assertLess(weinberg_check(ModelSpec('log-birula', b=0.1), self.psi), 1e-5)

    def test_fractal(self):
        self.assertLess(weinberg_check(ModelSpec('fractal', alpha=1.0, beta=0.2), self.psi), 1e-5)

    def test_cubic(self):
        self.assertLess(weinberg_check(ModelSpec('cubic-gp', g=1.0), self.psi), 1e-5)

    def test_log_term_needed(self):
        b = 0.1

        def without_norm_term(spec, psi, conj):
            return hamiltonian_density(spec, psi, conj) - spec.b * conj * psi.values

        deviation = weinberg_check(ModelSpec('log-birula', b=b), self.psi, density=without_norm_term)
        self.assertGreater(deviation, 1e-2)

    def test_scale_convergence(self):
        spec = ModelSpec('log-birula', b=0.1)
        with self.assertLogs(level='WARNING'):
            coarse = weinberg_check(spec, self.psi, probe_scale=1e-2)
            fine = weinberg_check(spec, self.psi, probe_scale=5e-3)
        self.assertTrue(3.5 <= coarse / fine <= 4.5, coarse / fine)

    def test_not_applicable(self):
        self.assertRaises(NotApplicable, weinberg_check, ModelSpec('kinematic', a=1.0), self.psi)


class TestExpectedGap(unittest.TestCase):

    def test_matches_functionals(self):
        grid = make_grid(2 * math.pi * 8, 256)
        psi = random_field(grid, modes=5, seed=21, offset=1.0, scale=0.5)
        for spec in (ModelSpec('log-birula', b=0.1), ModelSpec('hydro-combined', a=0.5, b=0.2),
                     ModelSpec('cubic-gp', g=1.0), ModelSpec('fractal', alpha=1.0, beta=0.2),
                     ModelSpec('kinematic', a=0.5)):
            gap = energy_ft(spec, psi) - energy_qm(spec, psi)
            self.assertLess(abs(gap - expected_energy_gap(spec, psi)), 1e-8 * max(1.0, abs(gap)), spec.variant)
