import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "rftorsion._core",
    sources=sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
