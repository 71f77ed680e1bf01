# Sphinx configuration for the krtorus API reference.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

from pathlib import Path
import sys

ROOT = Path(__file__).resolve().parents[2]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

project = "krtorus"
copyright = "2026, krtorus developers"
author = "krtorus developers"
release = "1.0.0"

extensions = ["sphinx.ext.autodoc", "sphinx.ext.napoleon", "sphinx.ext.mathjax"]

# docstrings use google style sections (Args, Returns, Raises)
napoleon_google_docstring = True
napoleon_numpy_docstring = False
autodoc_member_order = "bysource"
autodoc_typehints = "description"
# only src.cli imports hydra
autodoc_mock_imports = ["hydra"]

exclude_patterns = []

html_theme = "sphinx_rtd_theme"
