"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so the extension is marked optional: a missing compiler
degrades the install instead of failing it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "utvpi._kernels._speedups",
                ["src/utvpi/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
