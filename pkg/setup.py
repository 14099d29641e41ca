"""Build script: compiles the optional Cython kernels.

The package is fully functional without the extension (a pure-Python
mirror of every kernel ships in ``falaudit._slowloops``), so a missing
Cython or C compiler downgrades the build instead of failing it.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "falaudit._fastloops",
                ["src/falaudit/_fastloops.pyx"],
                # These flags keep the compiled kernels bit-identical to the
                # pure-Python fallback: no FMA contraction, and no fusing of
                # adjacent cos/sin calls into glibc's sincos (whose results
                # can differ from separate sin/cos calls in the last ulp;
                # disabling the builtins is what actually stops GCC's
                # sin/cos-pair pass).
                extra_compile_args=[
                    "-O2",
                    "-ffp-contract=off",
                    "-fno-builtin-sin",
                    "-fno-builtin-cos",
                ],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
