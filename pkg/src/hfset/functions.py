"""Functions as sets of Kuratowski pairs, with everywhere-defined evaluation.

``V(x, f)`` picks the canonically least pair ``(x, y)`` in ``f`` and
returns ``y``; when ``f`` has no pair with first component ``x`` (or is not
a graph at all) the answer is the empty set.
"""
from __future__ import annotations

import weakref
from typing import Callable, Optional

from hfset.kernel import (
    HSet,
    choose,
    empty,
    from_elements,
    pair_set,
    singleton,
)


def kpair(x: HSet, y: HSet) -> HSet:
    """``{{x}, {x, y}}``."""
    return pair_set(singleton(x), pair_set(x, y))


def _split(p: HSet) -> Optional[tuple]:
    elems = p.elems
    if len(elems) == 1:
        (only,) = elems
        if len(only) == 1:
            x = only.elems[0]
            return x, x
        return None
    if len(elems) == 2:
        a, b = elems
        for single, double in ((a, b), (b, a)):
            if len(single) == 1 and len(double) == 2:
                x = single.elems[0]
                if x in double:
                    u, v = double.elems
                    return x, (v if u is x else u)
    return None


def is_kpair(p: HSet) -> bool:
    return _split(p) is not None


def pr1(p: HSet) -> HSet:
    parts = _split(p)
    return parts[0] if parts else empty()


def pr2(p: HSet) -> HSet:
    parts = _split(p)
    return parts[1] if parts else empty()


_tables: "weakref.WeakKeyDictionary[HSet, dict]" = weakref.WeakKeyDictionary()


def _table(f: HSet) -> dict:
    """First-component -> value of the canonically least matching pair."""
    table = _tables.get(f)
    if table is None:
        table = {}
        for p in f.elems:
            parts = _split(p)
            if parts is not None and parts[0] not in table:
                table[parts[0]] = parts[1]
        _tables[f] = table
    return table


def V(x: HSet, f: HSet) -> HSet:
    """Evaluate the graph ``f`` at ``x``; defined for every pair of sets."""
    y = _table(f).get(x)
    return empty() if y is None else y


def V_by_choice(x: HSet, f: HSet) -> HSet:
    """Unindexed evaluation straight from the choice operator (used as an oracle)."""
    return pr2(choose(lambda p: is_kpair(p) and pr1(p) is x, f))


def graph_from_map(d: HSet, m: Callable[[HSet], HSet]) -> HSet:
    return from_elements(kpair(x, m(x)) for x in d.elems)


def domain(f: HSet) -> HSet:
    return from_elements(_table(f).keys())


def range_(f: HSet) -> HSet:
    return from_elements(parts[1] for parts in map(_split, f.elems) if parts is not None)


range = range_  # noqa: A001 - public name matches the set-theoretic operation


def is_function_graph(f: HSet) -> bool:
    seen = set()
    for p in f.elems:
        parts = _split(p)
        if parts is None or parts[0] in seen:
            return False
        seen.add(parts[0])
    return True


def is_injective(f: HSet) -> bool:
    values = [parts[1] for parts in map(_split, f.elems) if parts is not None]
    return is_function_graph(f) and len(set(values)) == len(values)


def identity_graph(s: HSet) -> HSet:
    return graph_from_map(s, lambda x: x)


def compose_graphs(g: HSet, f: HSet) -> HSet:
    """``g`` after ``f``, restricted to points whose image lies in ``domain(g)``."""
    tf, tg = _table(f), _table(g)
    return from_elements(kpair(x, tg[y]) for x, y in tf.items() if y in tg)


def inverse_graph(f: HSet) -> HSet:
    return from_elements(
        kpair(parts[1], parts[0]) for parts in map(_split, f.elems) if parts is not None
    )


def graph_items(f: HSet) -> list:
    """``(x, V(x, f))`` for each point of the domain, ascending."""
    return sorted(_table(f).items())
