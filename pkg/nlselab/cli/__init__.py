from .config import ExperimentConfig, line_of
from .experiments import ExperimentRunner, Outcome
from .main import run, list_experiments
