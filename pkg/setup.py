import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or with TFTMUL_PURE=1)
# the package installs as pure Python and selects the fallback at import.
ext_modules = []
if os.environ.get("TFTMUL_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("tftmul._kernels", ["src/tftmul/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
