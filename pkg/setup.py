"""Build script: the Laurent-polynomial kernels are compiled with Cython when
it is available; otherwise the package installs pure Python and the kernels
fall back at import time."""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("GREENBLOCKS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("greenblocks.exactalg._ckernels",
                       ["src/greenblocks/exactalg/_ckernels.pyx"],
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": 3,
                                 "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
