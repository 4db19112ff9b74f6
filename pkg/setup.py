import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BERGER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "berger._core",
                    ["src/berger/_core.pyx"],
                    # keep a*b+c unfused and sin/cos separate (no sincos merge) so both
                    # backends round identically
                    extra_compile_args=["-O2", "-ffp-contract=off", "-fno-builtin"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
