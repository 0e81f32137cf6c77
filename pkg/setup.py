import os
import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("SPHDESIGN_NO_EXT"):
    try:
        ext_modules = cythonize(
            [
                Extension(
                    "sphdesign._accel._pairsums",
                    ["src/sphdesign/_accel/_pairsums.pyx"],
                    extra_compile_args=["-O3", "-fopenmp"],
                    extra_link_args=["-fopenmp"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # compiled core is optional; fallback kicks in at import
        warnings.warn(f"building the compiled kernels failed ({exc}); "
                      "the pure numpy fallback will be used")
        ext_modules = []

setup(ext_modules=ext_modules)
