from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "quinticlab._speedups",
                ["src/quinticlab/_speedups.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    # Build without the compiled kernel; the package falls back to the
    # numpy implementation at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
