"""Build the optional compiled search kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); building it makes the exact solvers 50-200x faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "monogrid._kernels._speedups",
                ["src/monogrid/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
