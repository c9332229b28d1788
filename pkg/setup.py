"""Build script: compiles the optional C kernel.

The package works without the extension (a pure-Python twin of the kernel is
selected at import time), so any failure to cythonize or compile is not
fatal; set ECTORSION_NO_EXT=1 to skip the extension build on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ECTORSION_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "ectorsion._speedups",
                    ["src/ectorsion/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
