"""Builds the optional compiled kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/rp2conf/_canon_c.pyx"], quiet=True)
except ImportError:
    pass

setup(ext_modules=ext_modules)
