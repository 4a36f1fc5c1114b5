"""Build script: compiles the optional fast kernel extension.

If Cython or a C compiler is unavailable the build still succeeds; the
package falls back to the pure-Python kernels at import time.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cubic27._fastcore", ["src/cubic27/_fastcore.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - environment without Cython
    print(f"cubic27: skipping fast kernel build ({exc}); pure kernels will be used")

setup(ext_modules=ext_modules)
