"""Build the optional compiled kernels.

The package works without them: ``mixedbraid.kernels`` falls back to the
pure-Python implementation when ``_ckernels`` cannot be imported.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "mixedbraid._ckernels",
                ["src/mixedbraid/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
