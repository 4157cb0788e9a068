import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ROWMOTION_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "rowmotion._speedups",
                    ["src/rowmotion/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install with the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
