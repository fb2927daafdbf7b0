# -*- coding: utf-8 -*-
#
# LibSnake documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# The package directory is three levels up; autodoc imports libsnake from
# its parent.
sys.path.insert(0, os.path.abspath('../../../..'))

autoclass_content = "both"

# -- General configuration -----------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['.templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'LibSnake'
copyright = u'2026, LibSnake developers'

version = '1.0'
release = '1.0'

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'LibSnakedoc'
