import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GRAPHDEGEN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "graphdegen.kernels._core",
                    ["src/graphdegen/kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install pure-Python only; the kernel selector
        # falls back at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
