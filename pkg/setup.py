"""Build script: compiles the optional crypto kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile downgrades to
a warning instead of aborting the install. Set LEAPCAN_PURE=1 to skip
the extension entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except (CCompilerError, ExecError, PlatformError) as exc:
            sys.stderr.write(
                "warning: compiled kernel build failed (%s); "
                "installing with the pure-Python fallback\n" % exc
            )

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError) as exc:
            sys.stderr.write(
                "warning: %s failed to compile (%s); using pure-Python fallback\n"
                % (ext.name, exc)
            )


ext_modules = []
if cythonize is not None and not os.environ.get("LEAPCAN_PURE"):
    ext_modules = cythonize(
        [
            Extension(
                "leapcan.crypto._kernel",
                ["src/leapcan/crypto/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
