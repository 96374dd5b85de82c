"""Build script: compiles the optional C kernel.

Set QPKNOT_PURE=1 to skip the extension and install the pure-Python
package only; the kernel is selected at import time either way.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("QPKNOT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qpknot/_ckernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
