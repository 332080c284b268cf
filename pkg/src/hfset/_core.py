"""Select the compiled kernels when available.

Set ``HFSET_PURE=1`` to force the pure-Python implementation.
"""
import os

from hfset import _purecore

BACKEND = "python"
_impl = _purecore

if os.environ.get("HFSET_PURE", "") not in ("1", "true", "yes"):
    try:
        from hfset import _speedups as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:
        _impl = _purecore

code_members = _impl.code_members
code_is_transitive = _impl.code_is_transitive
code_is_ordinal = _impl.code_is_ordinal
rows_is_order = _impl.rows_is_order
rows_is_total = _impl.rows_is_total
rows_least_in = _impl.rows_least_in
rows_all_subsets_have_least = _impl.rows_all_subsets_have_least
rows_subsets_have_least = _impl.rows_subsets_have_least
rows_maximal = _impl.rows_maximal
rows_strictly_below = _impl.rows_strictly_below

__all__ = [
    "BACKEND",
    "code_members",
    "code_is_transitive",
    "code_is_ordinal",
    "rows_is_order",
    "rows_is_total",
    "rows_least_in",
    "rows_all_subsets_have_least",
    "rows_subsets_have_least",
    "rows_maximal",
    "rows_strictly_below",
]
