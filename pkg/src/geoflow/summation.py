"""Deterministic compensated summation.

tree_sum reduces a sequence with a fixed-shape pairwise tree: split at
len // 2 down to runs of at most 64 values, each run accumulated with
Neumaier compensation.  The reduction shape depends only on the length, so
the result is bit-identical across runs and process counts for the same
input order, while the tree keeps rounding error near the compensated
optimum for long sums.
"""

from __future__ import annotations

_LEAF = 64

__all__ = ["tree_sum"]


def _neumaier(vals, lo, hi):
    s = 0.0
    c = 0.0
    for i in range(lo, hi):
        v = vals[i]
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
    return s + c


def _tree(vals, lo, hi):
    if hi - lo <= _LEAF:
        return _neumaier(vals, lo, hi)
    mid = lo + (hi - lo) // 2
    return _tree(vals, lo, mid) + _tree(vals, mid, hi)


def tree_sum(values):
    """Sum a sequence of floats or complex numbers deterministically."""
    vals = list(values)
    if not vals:
        return 0.0
    if any(isinstance(v, complex) for v in vals):
        re = _tree([float(v.real) for v in vals], 0, len(vals))
        im = _tree([float(v.imag) for v in vals], 0, len(vals))
        return complex(re, im)
    vals = [float(v) for v in vals]
    return _tree(vals, 0, len(vals))
