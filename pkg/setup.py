"""Build hook for the optional compiled sweep kernel.

The package is pure Python except for troplines/_fastsweep.pyx, a Cython
translation of the integer configuration-analysis kernel used by the
verification sweeps. If Cython or a C compiler is unavailable the build
falls back to a pure wheel; troplines.kernel selects the pure-Python
implementation at import time in that case.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "troplines._fastsweep",
                sources=["src/troplines/_fastsweep.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"troplines: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
