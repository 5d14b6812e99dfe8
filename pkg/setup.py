"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python twin of the kernels
is selected at import time), so a failed C build must not fail the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "erfiolo._ckernels",
                ["src/erfiolo/_ckernels.pyx"],
                # -ffp-contract=off keeps the compiled kernels bit-compatible
                # with the pure-Python twin (no FMA contraction).
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
