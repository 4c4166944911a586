"""Build the optional compiled kernel.

The package works without it: ``circramsey._backend`` falls back to the
pure-Python kernel when ``circramsey._kernels`` cannot be imported.
"""
import platform

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    args = ["-O3"]
    if platform.machine() in ("x86_64", "AMD64"):
        args.append("-march=native")
    ext = Extension(
        "circramsey._kernels",
        ["src/circramsey/_kernels.pyx"],
        extra_compile_args=args,
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
