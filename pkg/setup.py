import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "bckspec._kernels_c",
                ["src/bckspec/_kernels_c.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
else:
    warnings.warn(
        "Cython unavailable: skipping the compiled kernel; "
        "bckspec will use the pure-Python backend"
    )
    ext_modules = []

setup(ext_modules=ext_modules)
