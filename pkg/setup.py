"""Builds the optional compiled kernel extension.

The package works without it (a pure-Python twin is selected at import);
set CRITGROUP_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CRITGROUP_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("critgroup._core_cy", ["src/critgroup/_core_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
