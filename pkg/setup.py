"""Builds the optional compiled kernels.

If Cython or a C compiler is missing the package still installs and falls
back to the pure-Python kernels at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("affknuth._kernels", ["src/affknuth/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
