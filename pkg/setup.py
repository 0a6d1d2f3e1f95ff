"""Build script: optionally compiles the integer-reduction kernel with Cython.

The kernel has a single source, src/lieq/_kernel/_impl.py. It is copied to
_compiled.pyx and cythonized so the interpreted and compiled backends can
never diverge. If Cython or a C compiler is missing the package still
installs and falls back to the pure-Python kernel at import time.
"""

import shutil
from pathlib import Path

from setuptools import Extension, setup

HERE = Path(__file__).resolve().parent
IMPL = HERE / "src" / "lieq" / "_kernel" / "_impl.py"
PYX = HERE / "src" / "lieq" / "_kernel" / "_compiled.pyx"

ext_modules = []
try:
    from Cython.Build import cythonize

    if IMPL.exists():
        shutil.copyfile(IMPL, PYX)
        ext_modules = cythonize(
            [Extension("lieq._kernel._compiled", [str(PYX.relative_to(HERE))])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
except ImportError:
    pass

setup(ext_modules=ext_modules)
