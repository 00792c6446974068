"""Builds the optional compiled kernel; without it the package falls back
to the pure-Python implementation at import time."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("bywords._kernels._native", ["src/bywords/_kernels/_native.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
