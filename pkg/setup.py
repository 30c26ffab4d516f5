import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QSHRB_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("qshrb._kernel_c", ["src/qshrb/_kernel_c.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
