# -*- coding: utf-8 -*-
#
# Sphinx configuration for the idealclose documentation.

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import version as mod_version


# -- Project information -----------------------------------------------------

project = 'idealclose'
copyright = '2026, idealclose developers'
author = 'idealclose developers'

version = mod_version.__version__
release = mod_version.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

napoleon_numpy_docstring = True
autosummary_generate = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None

exclude_patterns = [
    '_build',
    'Thumbs.db',
    '.DS_Store',
]

pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'logo_only': False,
    'display_version': True,
}
html_title = 'idealclose'
htmlhelp_basename = 'idealclosedoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'idealclose.tex', 'idealclose Documentation',
     'idealclose developers', 'manual'),
]
