# Builds the optional compiled kernel extension. The package falls back to
# the numpy kernels at import time when the extension is unavailable.
import numpy as np
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "cascademl.kernels._native",
        sources=["src/cascademl/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
