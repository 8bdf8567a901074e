"""Kernel backend selection.

The compiled Cython extension is preferred when it imported cleanly;
otherwise the numpy fallback is used.  Set TOKEN_SPECTRA_BACKEND=python
to force the fallback (used by the benchmark and the backend-agreement
tests).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TOKEN_SPECTRA_BACKEND", "").lower() == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

token_edge_ranks = _impl.token_edge_ranks
pqrs_terms = _impl.pqrs_terms
