"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set SAMFILT_PURE=1 in the environment to force the pure implementation.
Compiled kernels work on machine integers; inputs whose coordinates exceed
the safe bound are routed to the pure versions so that nothing ever wraps.
"""

from __future__ import annotations

import importlib
import os

from . import pure as _pure

# products of two coordinates must stay inside int64 in the compiled paths
_SAFE = 1 << 30

# Import by full dotted name: a plain `from . import _fast` would silently
# bind the pre-existing module attribute if one were ever set, instead of
# importing the extension.
_fast = None
if os.environ.get("SAMFILT_PURE") != "1":
    try:
        _fast = importlib.import_module(__name__ + "._fast")
    except ImportError:
        _fast = None

IMPLEMENTATION = "compiled" if _fast is not None else "pure"


def _small(points) -> bool:
    for p in points:
        for x in p:
            if x >= _SAFE:
                return False
    return True


if _fast is None:
    reduce_antichain = _pure.reduce_antichain
    any_le = _pure.any_le
    colength_2d = _pure.colength_2d
    prefix_union_count_2d = _pure.prefix_union_count_2d
    staircase_gens_2d = _pure.staircase_gens_2d
else:

    def reduce_antichain(points):
        pts = list(points)
        if pts and len(pts[0]) <= 8 and _small(pts):
            return _fast.reduce_antichain(pts)
        return _pure.reduce_antichain(pts)

    def any_le(points, e):
        pts = list(points)
        if _small(pts) and _small([e]):
            return _fast.any_le(pts, e)
        return _pure.any_le(pts, e)

    def colength_2d(gens):
        pts = list(gens)
        if _small(pts):
            return _fast.colength_2d(pts)
        return _pure.colength_2d(pts)

    def prefix_union_count_2d(rows):
        rws = list(rows)
        if _small(rws):
            return _fast.prefix_union_count_2d(rws)
        return _pure.prefix_union_count_2d(rws)

    def staircase_gens_2d(rows, xmin=0, ymin=0):
        rws = list(rows)
        if _small(rws) and max(xmin, ymin) < _SAFE:
            return _fast.staircase_gens_2d(rws, xmin, ymin)
        return _pure.staircase_gens_2d(rws, xmin, ymin)
