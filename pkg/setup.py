from setuptools import Extension, setup
from Cython.Build import cythonize

# Strict IEEE semantics are required by the double-double kernel:
# no fast-math, and no contraction of a*b+c into fma behind our back.
ext = Extension(
    "spindet._ddem",
    ["src/spindet/_ddem.pyx"],
    extra_compile_args=["-O2", "-ffp-contract=off"],
)

setup(ext_modules=cythonize([ext], language_level=3))
