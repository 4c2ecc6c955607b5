# -*- coding: utf-8 -*-
#
# Sphinx configuration for the netshrink documentation.
# http://www.sphinx-doc.org/en/stable/config

import os
import sys
sys.path.insert(0, os.path.join(os.path.abspath('.'), '..', '..'))

exec(open(os.path.join(
	os.path.abspath('.'), '..', '..', 'netshrink', 'version.py')).read())


# -- Project information -----------------------------------------------------

project = 'Netshrink'
copyright = '2025, netshrink developers'
author = AUTHOR

release = __version__
version = '.'.join(release.split('.')[:2])


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]
autoclass_content = 'both'
# numerics are not needed to render the API pages
autodoc_mock_imports = ['numpy', 'scipy', 'networkx']
autodoc_default_flags = [
    'members',
    'inherited-members',
    'show-inheritance'
    ]
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'Netshrinkdoc'


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'netshrink', 'Netshrink Documentation', [author], 1)
]
