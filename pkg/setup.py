"""Build script: compiles the optional fast kernels when Cython + a C compiler exist.

The package is fully functional without the extension; `ordkit.kernels`
falls back to the pure-Python implementation at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ORDKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "ordkit._kernels",
                    ["src/ordkit/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
