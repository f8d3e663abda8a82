"""Select the gluing census kernel at import time.

The compiled extension is used when it was built; set ``HERMKP_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _wick_py

python_census_chunk = _wick_py.census_chunk

try:
    from ._wick_ext import census_chunk as compiled_census_chunk
except ImportError:  # extension not built
    compiled_census_chunk = None

if compiled_census_chunk is not None and not os.environ.get("HERMKP_PURE_PYTHON"):
    census_chunk = compiled_census_chunk
    BACKEND = "cython"
else:
    census_chunk = python_census_chunk
    BACKEND = "python"
