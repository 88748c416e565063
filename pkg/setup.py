from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "z4hull.kernels._core",
                ["src/z4hull/kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the kernel
    # package falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
