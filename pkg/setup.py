"""Build hooks: compile the optional fast kernels when Cython and a C
toolchain are available, fall back to the pure-Python kernels otherwise.

The wheel is fully functional either way; samfilt.kernel_implementation
reports which variant is active.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Never fail the install over the optional extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any toolchain failure is fine
            print("skipping optional compiled kernels: %s" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print("skipping optional compiled kernels: %s" % exc)


ext_modules = []
if os.environ.get("SAMFILT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/samfilt/_kernels/_fast.pyx"], language_level=3
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
