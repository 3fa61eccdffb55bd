from .field import Grid1D, WaveField, make_grid
from .models import ModelSpec, time_derivative

#: package version
__version__ = version = '0.1.0'
