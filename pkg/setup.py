"""Build script: compiles the optional Cython kernel when possible.

The package is fully functional without the extension (a pure-Python
twin is selected at import); any build failure is demoted to a warning.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/gsp4euler/_kernel_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # cython or compiler missing: pure-Python fallback
    print(f"warning: skipping compiled kernel ({exc})")

setup(ext_modules=ext_modules)
