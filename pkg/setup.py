from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("cliquekit._speedups", ["src/cliquekit/_speedups.pyx"]),
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    ),
)
