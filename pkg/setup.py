"""Build script: compiles the optional arithmetic kernel.

The package is pure Python; the extension only accelerates the integer
convolution / monic reduction loops. If Cython or a C compiler is
missing (or TATEK_PURE=1 is set), the build silently falls back to the
interpreted kernel.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler: not fatal
            print(f"warning: extension build skipped ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); using pure-Python kernel")


ext_modules = []
if os.environ.get("TATEK_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("tatek._kernel._speedups", ["src/tatek/_kernel/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
