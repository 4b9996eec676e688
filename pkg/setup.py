"""Build script. Compiles the optional C speedup kernel when Cython and a C
compiler are available; the package falls back to the pure-Python kernel
otherwise, so a failed extension build is never fatal."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SALAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/salab/_speedups.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
