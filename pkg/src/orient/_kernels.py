"""Kernel dispatch: the compiled extension when built, else the fallback.

Set ORIENT_PURE_PYTHON=1 to force the fallback (checked once, at import).
The wrappers also route oversized inputs to the fallback, since the compiled
kernels work in fixed-width machine words.
"""

from __future__ import annotations

import os
from array import array

from . import _fallback

try:
    from . import _core
except ImportError:
    _core = None

_impl = _core
if _core is None or os.environ.get("ORIENT_PURE_PYTHON"):
    _impl = _fallback


def implementation() -> str:
    """Name of the active kernel set: "compiled" or "fallback"."""
    return _impl.NAME


def canonical_min(bits, nperms, npairs, dst, flip):
    """Minimum relabeling of bits over all permutation tables, with its index."""
    if _impl is _core and npairs <= 63:
        return _core.canonical_min(bits, nperms, npairs, dst, flip)
    return _fallback.canonical_min(bits, nperms, npairs, dst, flip)


def scan_triples(masks, op, width):
    """First escaping vote over a sorted mask list: (i, j, k, result) or None."""
    if _impl is _core and width <= 63:
        return _core.scan_triples(array("Q", masks), op, width)
    return _fallback.scan_triples(list(masks), op)


def backtrack(num_vars, order, scope_depths, alloweds):
    """Backtracking search; see orient._fallback.backtrack for the contract."""
    if not scope_depths:
        return 0
    widest = max(len(s) for s in scope_depths)
    if _impl is _core and num_vars <= 63 and widest <= 22:
        trig: list[list[int]] = [[] for _ in range(num_vars)]
        for c, depths in enumerate(scope_depths):
            trig[max(depths)].append(c)
        trig_off = array("i", [0])
        trig_ids = array("i")
        for d in range(num_vars):
            trig_ids.extend(trig[d])
            trig_off.append(len(trig_ids))
        scope_off = array("i", [0])
        scope_flat = array("i")
        abyte_off = array("i", [0])
        abytes = bytearray()
        for c, depths in enumerate(scope_depths):
            scope_flat.extend(depths)
            scope_off.append(len(scope_flat))
            table = bytearray(((1 << len(depths)) + 7) >> 3)
            for vec in alloweds[c]:
                table[vec >> 3] |= 1 << (vec & 7)
            abytes.extend(table)
            abyte_off.append(len(abytes))
        return _core.backtrack(
            num_vars,
            array("i", order),
            trig_off,
            trig_ids,
            scope_off,
            scope_flat,
            abyte_off,
            abytes,
        )
    return _fallback.backtrack(num_vars, order, scope_depths, alloweds)
