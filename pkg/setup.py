"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-NumPy fallback is
selected at import time), so a failed compile only costs speed.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "sepvol._kernels",
                ["src/sepvol/_kernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # noqa: BLE001 - any build-chain failure falls back
    sys.stderr.write(f"sepvol: skipping Cython extension ({exc!r}); "
                     "pure-Python kernels will be used\n")

setup(ext_modules=ext_modules)
