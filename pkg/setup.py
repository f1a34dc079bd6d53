"""Build script: compiles the optional Cython search core.

The package works without the extension (a pure-Python twin of the search
kernel is selected at import time), so any build failure here downgrades to
a pure install instead of aborting.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping extension build ({exc}); "
                  "falling back to the pure-Python core")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to the pure-Python core")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ballham._core_cy",
                ["src/ballham/_core_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
