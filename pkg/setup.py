import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ORBITCODE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("orbitcode._kernels._core", ["src/orbitcode/_kernels/_core.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install the pure-Python package only.
        ext_modules = []

setup(ext_modules=ext_modules)
