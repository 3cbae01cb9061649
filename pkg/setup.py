from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python fallback still works
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("nearplatonic._core", ["src/nearplatonic/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
