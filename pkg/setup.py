"""Build script: compiles the optional Smith-normal-form kernel.

The extension is best-effort: if Cython or a C compiler is unavailable
the package installs without it and the pure-Python path is used.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/khoarrow/_snfcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; building without the compiled SNF kernel",
          file=sys.stderr)

setup(ext_modules=ext_modules)
