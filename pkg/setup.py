"""Build script: compiles the optional row-reduction extension.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so any failure here downgrades to a
pure build instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rectilt/_rowred_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"rectilt: skipping compiled row-reduction core ({exc!r})")

setup(ext_modules=ext_modules)
