import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HECKEK_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("heckek._ckernels", ["src/heckek/_ckernels.pyx"],
                       include_dirs=[numpy.get_include()])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
