"""Backend selection for the hot kernels.

The compiled extension is preferred when it imported cleanly; setting
the environment variable ``BCKSPEC_PURE=1`` forces the pure backend.
Both backends implement the same functions with identical outputs
(including which counterexample witness is reported first).
"""

import os

from . import _kernels_py

if os.environ.get("BCKSPEC_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

axiom_witnesses = _impl.axiom_witnesses
leq_matrix = _impl.leq_matrix
meet_table = _impl.meet_table
ideal_closure = _impl.ideal_closure
is_ideal_mask = _impl.is_ideal_mask
enumerate_ideal_masks = _impl.enumerate_ideal_masks


def available_backends():
    """Name -> module for every backend importable in this environment."""
    out = {"pure": _kernels_py}
    try:
        from . import _kernels_c

        out["compiled"] = _kernels_c
    except ImportError:
        pass
    return out
