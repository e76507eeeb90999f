"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The Cython module is used when it was built; set ``SLICETREE_PURE_PYTHON=1``
to force the fallback. ``use()`` switches backends temporarily (tests and the
benchmark compare both).
"""

from __future__ import annotations

import contextlib
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if os.environ.get("SLICETREE_PURE_PYTHON") or _ckernels is None:
    active = _pykernels
else:
    active = _ckernels


def backend_name():
    return "cython" if active is _ckernels and _ckernels is not None else "python"


@contextlib.contextmanager
def use(name):
    """Temporarily route every kernel call through backend ``name``."""
    global active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} not available (have {sorted(BACKENDS)})")
    previous = active
    active = BACKENDS[name]
    try:
        yield active
    finally:
        active = previous
