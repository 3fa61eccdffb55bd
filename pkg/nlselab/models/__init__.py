from itertools import product, chain

from . import linear, logarithmic, kinematic, hydro, fractal, cubic, nabla2log
from .spec import ModelSpec
from .base import Model
from .operations import ModelOutput, get_model, envelope_action, time_derivative, hamiltonian_density, \
    homogeneity_defect, expected_homogeneity_defect, log_identity_check, energy_qm, energy_ft

variants = (linear, logarithmic, kinematic, hydro, fractal, cubic, nabla2log)

models_by_variant = dict(chain.from_iterable(list(product(m.variant_names, [m.model_class])) for m in variants))
