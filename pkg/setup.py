import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CURVETOP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "curvetop._kernels",
                    ["src/curvetop/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install pure-Python only; curvetop.kernels
        # falls back to the interpreted implementation automatically.
        ext_modules = []

setup(ext_modules=ext_modules)
