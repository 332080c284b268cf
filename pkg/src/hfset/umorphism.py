"""Morphisms between underlying sets, defined once for every kind of structure."""
from __future__ import annotations

from typing import Optional

from hfset.errors import CompositionError
from hfset.functions import (
    compose_graphs,
    domain,
    identity_graph,
    inverse_graph,
    is_function_graph,
    is_injective,
    range_,
)
from hfset.kernel import HSet, sub
from hfset.notation import Mapping, Source, Target, U, field, make_struct


def make_umorphism(src: HSet, tgt: HSet, mapping: HSet) -> HSet:
    return make_struct([(Source, src), (Target, tgt), (Mapping, mapping)])


def source(f: HSet) -> HSet:
    return field(f, Source)


def target(f: HSet) -> HSet:
    return field(f, Target)


def mapping(f: HSet) -> HSet:
    return field(f, Mapping)


def umorphism_ok(f: HSet) -> bool:
    m = mapping(f)
    return (
        is_function_graph(m)
        and domain(m) is U(source(f))
        and sub(range_(m), U(target(f)))
    )


def uidentity(a: HSet) -> HSet:
    return make_umorphism(a, a, identity_graph(U(a)))


def ucompose(g: HSet, f: HSet) -> HSet:
    """``g`` after ``f``."""
    if target(f) is not source(g):
        raise CompositionError("target of the first morphism is not the source of the second")
    for h, name in ((f, "first"), (g, "second")):
        if not umorphism_ok(h):
            raise CompositionError(f"the {name} morphism is not a valid umorphism")
    return make_umorphism(source(f), target(g), compose_graphs(mapping(g), mapping(f)))


def is_bijective(f: HSet) -> bool:
    m = mapping(f)
    return umorphism_ok(f) and is_injective(m) and range_(m) is U(target(f))


def uinverse(f: HSet) -> Optional[HSet]:
    if not is_bijective(f):
        return None
    return make_umorphism(target(f), source(f), inverse_graph(mapping(f)))


def uinclusion(a: HSet, b: HSet) -> HSet:
    """The inclusion of ``U(a)`` into ``U(b)``; valid when ``U(a)`` is a subset."""
    return make_umorphism(a, b, identity_graph(U(a)))
