"""Build script: compiles the optional loop kernels.

The package is pure Python plus one optional Cython extension holding the
hot enumeration loops (point counting, correlation sums, smoothed sums).
If Cython or a C compiler is unavailable the install still succeeds and the
package falls back to the numpy implementations in divcor._core.fallback.
"""

import numpy
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "divcor._core._kernels",
                ["src/divcor/_core/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
