"""Build hook: compiles the optional cyclotomic kernel extension when Cython is present.

The package is fully functional without it; spinsum._kernel falls back to the
pure Python twin at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/spinsum/_poly_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
