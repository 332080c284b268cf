"""Ordered sets as structure objects carrying ``Underlying`` and ``OrderGraph``.

The order graph stores the non-strict relation as Kuratowski pairs
``(u, v)`` meaning ``u <= v``; the strict relation is derived.  For the
checks that quantify over the carrier (order axioms, least elements,
maximal elements) the graph is turned once into row bitmasks indexed by
the carrier's canonical order, and the work is done by the kernels in
:mod:`hfset._core`.
"""
from __future__ import annotations

import random
import weakref
from typing import Iterable, Optional

from hfset import _core
from hfset.errors import PreconditionError
from hfset.functions import _split, kpair
from hfset.kernel import HSet, empty, from_elements, inc, sub
from hfset.notation import OrderGraph, U, Underlying, field, make_struct

EXHAUSTIVE_LIMIT = 16
SAMPLED_SUBSETS = 1000


class _Index:
    __slots__ = ("carrier", "pos", "rows", "clean", "__weakref__")

    def __init__(self, a: HSet):
        carrier = U(a).elems
        pos = {x: i for i, x in enumerate(carrier)}
        rows = [0] * len(carrier)
        clean = True
        for p in relation(a).elems:
            parts = _split(p)
            if parts is None or parts[0] not in pos or parts[1] not in pos:
                clean = False
                continue
            rows[pos[parts[0]]] |= 1 << pos[parts[1]]
        self.carrier = carrier
        self.pos = pos
        self.rows = rows
        self.clean = clean

    def mask(self, s: Iterable[HSet]) -> int:
        m = 0
        for x in s:
            m |= 1 << self.pos[x]
        return m

    def members(self, mask: int) -> HSet:
        return from_elements(self.carrier[i] for i in _core.code_members(mask))


_indexes: "weakref.WeakKeyDictionary[HSet, _Index]" = weakref.WeakKeyDictionary()
_well_order_cache: "weakref.WeakKeyDictionary[HSet, bool]" = weakref.WeakKeyDictionary()


def _index(a: HSet) -> _Index:
    idx = _indexes.get(a)
    if idx is None:
        idx = _indexes[a] = _Index(a)
    return idx


def relation(a: HSet) -> HSet:
    return field(a, OrderGraph)


def order_from_graph(u: HSet, graph: HSet) -> HSet:
    return make_struct([(Underlying, u), (OrderGraph, graph)])


def make_order(u: HSet, rel: Iterable[tuple]) -> HSet:
    """Order structure on ``u`` whose ``<=`` holds exactly on the pairs in ``rel``."""
    pairs = []
    for x, y in rel:
        if x not in u or y not in u:
            raise PreconditionError("order pair lies outside the carrier")
        pairs.append(kpair(x, y))
    return order_from_graph(u, from_elements(pairs))


def leq(a: HSet, u: HSet, v: HSet) -> bool:
    idx = _index(a)
    i, j = idx.pos.get(u), idx.pos.get(v)
    if i is not None and j is not None:
        return bool((idx.rows[i] >> j) & 1)
    return inc(kpair(u, v), relation(a))


def lt(a: HSet, u: HSet, v: HSet) -> bool:
    return u is not v and leq(a, u, v)


def order_pairs(a: HSet) -> list:
    idx = _index(a)
    return [
        (idx.carrier[i], idx.carrier[j])
        for i, row in enumerate(idx.rows)
        for j in _core.code_members(row)
    ]


def is_order(a: HSet) -> bool:
    idx = _index(a)
    return idx.clean and _core.rows_is_order(idx.rows)


def is_total(a: HSet) -> bool:
    return is_order(a) and _core.rows_is_total(_index(a).rows)


def _sample_masks(n: int, count: int) -> list:
    rng = random.Random(n)
    return [rng.getrandbits(n) or 1 for _ in range(count)]


def is_well_order(a: HSet) -> bool:
    """Order in which every nonempty subset of the carrier has a least element.

    Exhaustive over all subsets up to 16 carrier points; beyond that, two-
    element subsets are checked exhaustively and 1000 random subsets are
    sampled.
    """
    cached = _well_order_cache.get(a)
    if cached is not None:
        return cached
    result = is_order(a)
    if result:
        rows = _index(a).rows
        n = len(rows)
        if n <= EXHAUSTIVE_LIMIT:
            result = _core.rows_all_subsets_have_least(rows)
        else:
            result = _core.rows_is_total(rows) and _core.rows_subsets_have_least(
                rows, _sample_masks(n, SAMPLED_SUBSETS)
            )
    _well_order_cache[a] = result
    return result


def _require_subset(s: HSet, a: HSet, what: str) -> _Index:
    idx = _index(a)
    if not sub(s, U(a)):
        raise PreconditionError(f"{what}: argument is not a subset of the carrier")
    return idx


def least(a: HSet, s: HSet) -> HSet:
    """Canonically least element of ``s`` lying below all of ``s``; empty if none."""
    idx = _require_subset(s, a, "least")
    i = _core.rows_least_in(idx.rows, idx.mask(s)) if len(s) else -1
    return idx.carrier[i] if i >= 0 else empty()


def punctured_downward(a: HSet, x: HSet) -> HSet:
    """The elements of the carrier strictly below ``x``."""
    idx = _index(a)
    j = idx.pos.get(x)
    if j is None:
        return from_elements(y for y in idx.carrier if lt(a, y, x))
    return idx.members(_core.rows_strictly_below(idx.rows, j))


def suborder(u: HSet, a: HSet) -> HSet:
    _require_subset(u, a, "suborder")
    kept = []
    for p in relation(a).elems:
        parts = _split(p)
        if parts is not None and parts[0] in u and parts[1] in u:
            kept.append(p)
    return order_from_graph(u, from_elements(kept))


def is_chain(a: HSet, c: HSet) -> bool:
    if not sub(c, U(a)):
        return False
    elems = c.elems
    return all(
        leq(a, x, y) or leq(a, y, x) for i, x in enumerate(elems) for y in elems[i + 1:]
    )


def upper_bound(a: HSet, c: HSet) -> HSet:
    """Least upper bound of ``c`` when there is one, else the canonically least upper bound.

    Returns the empty set when ``c`` has no upper bound in the carrier.
    """
    idx = _require_subset(c, a, "upper_bound")
    want = idx.mask(c)
    bounds = [i for i in range(len(idx.rows)) if _below_all(idx.rows, want, i)]
    if not bounds:
        return empty()
    bmask = 0
    for i in bounds:
        bmask |= 1 << i
    i = _core.rows_least_in(idx.rows, bmask)
    return idx.carrier[i if i >= 0 else bounds[0]]


def _below_all(rows: list, want: int, i: int) -> bool:
    m, k = want, 0
    while m:
        if m & 1 and not (rows[k] >> i) & 1:
            return False
        m >>= 1
        k += 1
    return True


def maximal_element(a: HSet) -> HSet:
    """Canonically least element with no strict successor (finite Zorn)."""
    idx = _index(a)
    if not idx.carrier:
        raise PreconditionError("maximal_element: the carrier is empty")
    if not is_order(a):
        raise PreconditionError("maximal_element: not an order")
    return idx.carrier[_core.rows_maximal(idx.rows)[0]]


_canonical_orders: "weakref.WeakKeyDictionary[HSet, HSet]" = weakref.WeakKeyDictionary()


def canonical_well_order(x: HSet) -> HSet:
    """Order on ``x`` induced by the canonical order of sets."""
    a = _canonical_orders.get(x)
    if a is None:
        elems = x.elems
        a = order_from_graph(
            x, from_elements(kpair(e, f) for i, e in enumerate(elems) for f in elems[i:])
        )
        _canonical_orders[x] = a
    return a


def membership_order(s: HSet) -> HSet:
    """``u <= v`` iff ``u`` is a member of ``v`` or ``u == v``."""
    return order_from_graph(
        s, from_elements(kpair(u, v) for u in s.elems for v in s.elems if u is v or u in v)
    )


def position(a: HSet, x: HSet) -> Optional[int]:
    """Number of carrier elements strictly below ``x`` (``None`` off the carrier)."""
    idx = _index(a)
    j = idx.pos.get(x)
    if j is None:
        return None
    return bin(_core.rows_strictly_below(idx.rows, j)).count("1")

