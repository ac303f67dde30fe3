from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "orient._core",
        ["src/orient/_core.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level="3"),
)
