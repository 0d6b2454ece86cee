from setuptools import setup

# The union-find / connectivity kernel has a compiled Cython variant.  The
# build degrades gracefully: without Cython (or a C compiler) the package
# installs anyway and finprof._kern falls back to the pure-Python kernel.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("finprof._kern._ckern", ["src/finprof/_kern/_ckern.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
