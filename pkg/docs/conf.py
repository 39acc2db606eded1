# -*- coding: utf-8 -*-
#
# Sphinx configuration of pywhitehead. The API pages are regenerated from src/ on every build.

import os
import sys
import shutil

from sphinx.ext import apidoc

__location__ = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(__location__, '../src'))

output_dir = os.path.join(__location__, "api")
module_dir = os.path.join(__location__, "../src/pywhitehead")
shutil.rmtree(output_dir, ignore_errors=True)

try:
    apidoc.main(["-f", "-o", output_dir, module_dir])
except Exception as e:
    print("Running `sphinx-apidoc` failed!\n{}".format(e))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.viewcode',
              'sphinx.ext.mathjax', 'sphinx.ext.napoleon']

source_suffix = '.rst'
master_doc = 'index'

project = u'pywhitehead'
copyright = u'2026, pywhitehead developers'

try:
    from pywhitehead import __version__ as version
except ImportError:
    version = ''
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_theme = 'alabaster'
htmlhelp_basename = 'pywhitehead-doc'

python_version = '.'.join(map(str, sys.version_info[0:2]))
intersphinx_mapping = {
    'python': ('https://docs.python.org/' + python_version, None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable', None),
}
