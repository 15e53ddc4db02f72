import os

from setuptools import setup

ext_modules = []
if os.environ.get("ZIGZAGMETRIC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/zigzagmetric/_ckernels.pyx"], language_level=3
        )
    except Exception:
        # no Cython / no compiler: the package falls back to the pure
        # Python kernels at import time
        ext_modules = []

setup(ext_modules=ext_modules)
