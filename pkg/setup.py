import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MORPHSTUDIO_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "morphstudio.morphogen._growth_core",
                    ["src/morphstudio/morphogen/_growth_core.pyx"],
                    # -ffp-contract=off: no FMA contraction, so the compiled
                    # kernel is bit-identical to the pure-Python fallback.
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
