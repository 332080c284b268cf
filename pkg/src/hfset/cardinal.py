"""Cardinality as the least equipotent ordinal, and Bernstein-Cantor-Schroeder.

The mutual-injection theorem is obtained from ordinals rather than by the
back-and-forth construction: each injection shows one set is equipotent to
a subset of the other, the subset lemma gives an inequality of
cardinalities each way, antisymmetry of the ordinal order makes them equal,
and the bijection is assembled from the two isomorphisms with the common
cardinal.
"""
from __future__ import annotations

import dataclasses
import weakref
from typing import Optional

from hfset.errors import PreconditionError
from hfset.functions import (
    _split,
    compose_graphs,
    domain,
    inverse_graph,
    is_function_graph,
    kpair,
    range_,
)
from hfset.kernel import HSet, from_elements, sub
from hfset.order import canonical_well_order, suborder
from hfset.ordinal import ordinal_leq, wo_avatar, wo_ordinal
from hfset.show import show


@dataclasses.dataclass(frozen=True)
class BijectionWitness:
    graph: HSet
    domain: HSet
    range: HSet


def _witness(graph: HSet) -> BijectionWitness:
    return BijectionWitness(graph, domain(graph), range_(graph))


def equipotent(x: HSet, y: HSet) -> bool:
    return len(x) == len(y)


def bijection_witness(x: HSet, y: HSet) -> Optional[BijectionWitness]:
    """Pair the i-th canonical element of ``x`` with the i-th of ``y``."""
    if not equipotent(x, y):
        return None
    return _witness(from_elements(kpair(a, b) for a, b in zip(x.elems, y.elems)))


_cardinals: "weakref.WeakKeyDictionary[HSet, HSet]" = weakref.WeakKeyDictionary()


def cardinality(x: HSet) -> HSet:
    """The least ordinal equipotent to ``x``.

    The well-order of ``x`` gives an ordinal isomorphic to ``x``; the
    smaller ordinals are exactly its elements, scanned in increasing order.
    """
    card = _cardinals.get(x)
    if card is None:
        candidate = wo_ordinal(canonical_well_order(x))
        card = next((o for o in candidate.elems if equipotent(o, x)), candidate)
        _cardinals[x] = card
    return card


def cardinal_iso(x: HSet) -> BijectionWitness:
    """Bijection from ``x`` onto ``cardinality(x)`` via ``wo_avatar``."""
    a = canonical_well_order(x)
    return _witness(from_elements(kpair(e, wo_avatar(a, e)) for e in x.elems))


def subset_cardinality_leq(u: HSet, x: HSet) -> bool:
    """For ``u`` a subset of ``x``: ``cardinality(u) <= cardinality(x)``.

    Goes through the suborder lemma: the suborder on ``u`` of a well-order
    of ``x`` has an ordinal at most that of the whole order.
    """
    if not sub(u, x):
        raise PreconditionError("subset_cardinality_leq: not a subset")
    a = canonical_well_order(x)
    sub_ordinal = wo_ordinal(suborder(u, a))
    whole = wo_ordinal(a)
    card_u = cardinality(u)
    if not (ordinal_leq(card_u, sub_ordinal) and ordinal_leq(sub_ordinal, whole)):
        raise AssertionError("suborder lemma failed")
    return ordinal_leq(card_u, cardinality(x))


def check_injection(f: HSet, src: HSet, tgt: HSet, name: str = "f") -> None:
    """Raise :class:`PreconditionError` unless ``f`` injects ``src`` into ``tgt``."""
    if not is_function_graph(f):
        raise PreconditionError(f"{name} is not a function graph")
    if domain(f) is not src:
        raise PreconditionError(f"{name}: domain differs from the source set")
    seen: dict = {}
    for p in f.elems:
        a, b = _split(p)
        if b not in tgt:
            raise PreconditionError(f"{name} maps {show(a)} to {show(b)}, outside the target")
        if b in seen:
            raise PreconditionError(
                f"{name} is not injective: {show(seen[b])} and {show(a)} both map to {show(b)}"
            )
        seen[b] = a


def bcs(x: HSet, y: HSet, f: HSet, g: HSet) -> BijectionWitness:
    """Bijection ``x -> y`` from injections ``f: x -> y`` and ``g: y -> x``."""
    check_injection(f, x, y, "f")
    check_injection(g, y, x, "g")
    card_x, card_y = cardinality(x), cardinality(y)
    # f and g are bijections onto their ranges, so those ranges share the cardinals
    if cardinality(range_(f)) is not card_x or cardinality(range_(g)) is not card_y:
        raise AssertionError("isomorphic sets with different cardinality")
    x_le_y = subset_cardinality_leq(range_(f), y)
    y_le_x = subset_cardinality_leq(range_(g), x)
    if not (x_le_y and y_le_x) or card_x is not card_y:
        raise AssertionError("ordinal antisymmetry failed")
    iso_x, iso_y = cardinal_iso(x), cardinal_iso(y)
    return _witness(compose_graphs(inverse_graph(iso_y.graph), iso_x.graph))
