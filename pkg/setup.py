from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "hermkp._wick_ext",
        ["src/hermkp/_wick_ext.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
