import json
import re

from ..constants import OUTPUT_ENV
from ..exceptions import ConfigError, InvalidArgument
from ..field import make_grid
from ..models import ModelSpec

#: top-level blocks of a config file
BLOCKS = ('experiment', 'grid', 'model', 'run', 'output')
GRID_KEYS = ('L', 'n')
OUTPUT_KEYS = ('directory', 'formats')
FORMATS = ('json', 'csv', 'fields')
DEFAULT_FORMATS = ('json', 'csv')
#: run keys every experiment accepts
COMMON_RUN_KEYS = ('dt', 'T', 'record_every', 'seed', 'integrator', 'tolerances')


def line_of(text, path):
    """ Line of the member at a dotted path in a JSON text, or None.

    Each name is searched after the previous one, so nested names resolve inside their block.

    >>> line_of('{\\n  "run": {"n": 1},\\n  "grid": {\\n    "n": 4\\n  }\\n}', 'grid.n')
    4
    """
    start = 0
    for key in path.split('.'):
        match = re.compile(r'"{}"\s*:'.format(re.escape(key))).search(text, start)
        if match is None:
            return None
        start = match.end()
    return text.count('\n', 0, start) + 1


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


class ExperimentConfig(object):
    """ One parsed and key-checked experiment configuration.

    Blocks are plain dictionaries; typed access goes through :meth:`grid`,
    :meth:`model_spec` and :meth:`value`, which raise :class:`ConfigError`
    naming the dotted field and its line.
    """

    def __init__(self, experiment, grid=None, model=None, run=None, output=None, text=''):
        self.experiment = experiment
        self.grid_block = dict(grid or {})
        self.model_block = dict(model or {})
        self.run_block = dict(run or {})
        self.output_block = dict(output or {})
        #: raw JSON text, for line diagnostics
        self.text = text

    @classmethod
    def from_text(cls, text):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise ConfigError("invalid JSON: {}".format(getattr(e, 'msg', e)), line=getattr(e, 'lineno', None))
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object", line=1)
        for key in data:
            if key not in BLOCKS:
                raise ConfigError("unknown key", key, line_of(text, key))
        if 'experiment' not in data:
            raise ConfigError("experiment name is required", 'experiment')
        if not isinstance(data['experiment'], str):
            raise ConfigError("experiment name must be a string", 'experiment', line_of(text, 'experiment'))
        for block in BLOCKS[1:]:
            if not isinstance(data.get(block, {}), dict):
                raise ConfigError("block must be a JSON object", block, line_of(text, block))
        config = cls(data['experiment'], data.get('grid'), data.get('model'), data.get('run'), data.get('output'),
                     text)
        config._check_keys('grid', config.grid_block, GRID_KEYS)
        config._check_keys('model', config.model_block, ModelSpec.parameters)
        config._check_keys('output', config.output_block, OUTPUT_KEYS)
        config._check_output()
        return config

    @classmethod
    def load(cls, path):
        try:
            with open(path, 'r') as f:
                text = f.read()
        except (IOError, OSError) as e:
            raise ConfigError("cannot read {}: {}".format(path, e))
        return cls.from_text(text)

    def error(self, field, msg):
        return ConfigError(msg, field, line_of(self.text, field))

    def _check_keys(self, block, values, accepted):
        for key in values:
            if key not in accepted:
                raise self.error("{}.{}".format(block, key), "unknown key")

    def _check_output(self):
        formats = self.output_block.get('formats', DEFAULT_FORMATS)
        if not isinstance(formats, (list, tuple)) or any(f not in FORMATS for f in formats):
            raise self.error('output.formats', "formats must be a list drawn from {}".format(', '.join(FORMATS)))
        directory = self.output_block.get('directory')
        if directory is not None and not isinstance(directory, str):
            raise self.error('output.directory', "directory must be a string")

    def check_run_keys(self, accepted, tolerances):
        """ Rejects run keys outside COMMON_RUN_KEYS + accepted and tolerance names outside tolerances """
        self._check_keys('run', self.run_block, COMMON_RUN_KEYS + tuple(accepted))
        given = self.run_block.get('tolerances', {})
        if not isinstance(given, dict):
            raise self.error('run.tolerances', "tolerances must be a JSON object")
        for name, value in given.items():
            if name not in tolerances:
                raise self.error('run.tolerances.{}'.format(name), "unknown tolerance")
            if not _is_number(value) or not value > 0:
                raise self.error('run.tolerances.{}'.format(name), "tolerance must be a positive number")

    @property
    def formats(self):
        return tuple(self.output_block.get('formats', DEFAULT_FORMATS))

    def output_directory(self, override=None, environ=None):
        """ --out, then output.directory, then $NLSE_LAB_OUT, then the working directory """
        if override:
            return override
        if self.output_block.get('directory'):
            return self.output_block['directory']
        if environ and environ.get(OUTPUT_ENV):
            return environ[OUTPUT_ENV]
        return '.'

    def grid(self):
        block = self.grid_block
        for key in GRID_KEYS:
            if key not in block:
                raise self.error('grid.{}'.format(key), "required")
        if not _is_number(block['L']):
            raise self.error('grid.L', "must be a number")
        if not isinstance(block['n'], int) or isinstance(block['n'], bool):
            raise self.error('grid.n', "must be an integer")
        try:
            return make_grid(block['L'], block['n'])
        except InvalidArgument as e:
            raise self.error('grid.n' if 'nodes' in str(e) else 'grid.L', str(e))

    def model_spec(self):
        if not self.model_block:
            raise ConfigError("model block is required", 'model')
        if 'variant' not in self.model_block:
            raise self.error('model.variant', "required")
        try:
            return ModelSpec(**self.model_block)
        except (InvalidArgument, TypeError) as e:
            raise ConfigError(str(e), 'model', line_of(self.text, 'model'))

    def value(self, name, default=None, kind='number'):
        """ run.<name> checked against kind: number, integer, string, bool, complex, numbers, or object

        Complex values are written as {"re": x, "im": y} or as plain numbers.
        """
        if name not in self.run_block:
            return default
        value = self.run_block[name]
        field = 'run.{}'.format(name)
        if kind == 'number':
            ok = _is_number(value)
        elif kind == 'integer':
            ok = isinstance(value, int) and not isinstance(value, bool)
        elif kind == 'string':
            ok = isinstance(value, str)
        elif kind == 'bool':
            ok = isinstance(value, bool)
        elif kind == 'object':
            ok = isinstance(value, dict)
        elif kind == 'numbers':
            if _is_number(value):
                value = [value]
            ok = isinstance(value, list) and len(value) > 0 and all(_is_number(v) for v in value)
        elif kind == 'complex':
            try:
                value = [self._complex(v) for v in (value if isinstance(value, list) else [value])]
                ok = len(value) > 0
            except ValueError:
                ok = False
        else:
            raise InvalidArgument("unknown value kind {}".format(kind))
        if not ok:
            raise self.error(field, "expected {}, got {!r}".format(kind, self.run_block[name]))
        return value

    @staticmethod
    def _complex(value):
        if _is_number(value):
            return complex(value)
        if isinstance(value, dict) and set(value) <= {'re', 'im'} and all(_is_number(v) for v in value.values()):
            return complex(value.get('re', 0.0), value.get('im', 0.0))
        raise ValueError(value)

    def echo(self):
        """ parameters as given, for the summary """
        return {'experiment': self.experiment, 'grid': self.grid_block, 'model': self.model_block,
                'run': self.run_block, 'output': self.output_block}

    def __repr__(self):
        return "<ExperimentConfig:{}>".format(self.experiment)
