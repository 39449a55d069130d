"""Selects the compiled relabelling kernels when available."""

import os

COMPILED = False
if not os.environ.get("RP2CONF_PURE"):
    try:
        from ._canon_c import best_encoding, best_labelling, relabel_mask, six_best

        COMPILED = True
    except ImportError:  # pragma: no cover - depends on the build
        pass
if not COMPILED:
    from ._canon_py import best_encoding, best_labelling, relabel_mask, six_best

__all__ = ["best_encoding", "best_labelling", "relabel_mask", "six_best", "COMPILED"]
