"""Build script: compiles the optional weight-census kernel when Cython is available.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any build failure here downgrades to a pure build
instead of aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "ucyclic._kernels._weightcensus",
                ["src/ucyclic/_kernels/_weightcensus.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # missing Cython, compiler, or sources
    print(f"building without the compiled weight-census kernel ({exc})",
          file=sys.stderr)

setup(ext_modules=ext_modules)
