# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

project = 'GaussHarmonic'
copyright = '2026, GaussHarmonic developers'  # noqa
author = 'GaussHarmonic developers'
version = '1.0.0'

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'sphinx.ext.napoleon']

add_module_names = False  # Shorten names
# If True, the default argument values of functions will be not evaluated
# on generating document. It preserves them as is in the source code.
autodoc_preserve_defaults = True
templates_path = ['_templates']

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = 'alabaster'
html_static_path = []

# sphinx-apidoc -o docs/rst_files/ ./gaussharmonic #  for generating rst files
# /docs make html #  for generating html
