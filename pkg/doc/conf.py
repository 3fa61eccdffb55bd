# Sphinx configuration for the nlselab documentation.

import sys, os

sys.path[0:0] = [os.path.abspath('..')]

import nlselab

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.intersphinx']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']

project = u'nlselab'
copyright = u'Copyright (c) 2020-present nlselab developers'
version = nlselab.version
release = nlselab.version

add_module_names = True
pygments_style = 'sphinx'
autoclass_content = 'init'
html_show_sphinx = False

doctest_path = [os.path.abspath('..')]
doctest_global_setup = """
import numpy as np
from nlselab import ModelSpec, make_grid
"""

intersphinx_mapping = {
    'py': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}
