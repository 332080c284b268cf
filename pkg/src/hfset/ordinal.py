"""Compatible well-orders, the generated order, ordinals and ``wo_avatar``.

A well-order ``a`` is compatible with a step function ``f`` when every
element of its carrier is ``f`` applied to the set of elements strictly
below it.  All compatible well-orders are initial segments of one
canonical chain ``e_0 = f({})``, ``e_{k+1} = f({e_0, ..., e_k})``, which is
what :func:`chain_generate` builds.  With the identity step the chain is
the sequence of numerals, so the generated order is the ordinal order.
"""
from __future__ import annotations

import dataclasses
import enum
import weakref
from typing import Callable, Optional

from hfset import _core
from hfset.config import get_limits
from hfset.errors import PreconditionError, ResourceLimitError
from hfset.functions import kpair
from hfset.kernel import HSet, as_natural, empty, from_elements, image, singleton, sub, union
from hfset.notation import U
from hfset.order import (
    _index,
    is_well_order,
    order_from_graph,
    punctured_downward,
)

StepFunction = Callable[[HSet], HSet]


class TriBool(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self):
        return self is TriBool.TRUE


def ID(x: HSet) -> HSet:
    return x


def succ(x: HSet) -> HSet:
    return union(x, singleton(x))


def const(c: HSet) -> StepFunction:
    def step(_x: HSet) -> HSet:
        return c

    step.__name__ = "const"
    return step


def _require_well_order(a: HSet, what: str) -> None:
    if not is_well_order(a):
        raise PreconditionError(f"{what}: not a well-order")


def is_compatible(a: HSet, f: StepFunction) -> bool:
    _require_well_order(a, "is_compatible")
    return all(f(punctured_downward(a, x)) is x for x in U(a).elems)


@dataclasses.dataclass(frozen=True)
class Chain:
    elements: tuple
    # True when the next step repeated an earlier element and generation stopped
    degenerate: bool

    def order(self) -> HSet:
        return chain_order(self.elements)


def chain_order(elements) -> HSet:
    """Total order listing ``elements`` in the given sequence."""
    return order_from_graph(
        from_elements(elements),
        from_elements(
            kpair(e, g) for i, e in enumerate(elements) for g in elements[i:]
        ),
    )


def chain_elements(f: StepFunction, fuel: int) -> Chain:
    if fuel > get_limits().max_fuel:
        raise ResourceLimitError(f"fuel {fuel} exceeds the limit {get_limits().max_fuel}")
    elements: list = []
    seen: set = set()
    below = empty()
    for _ in range(fuel):
        nxt = f(below)
        if nxt in seen:
            return Chain(tuple(elements), True)
        elements.append(nxt)
        seen.add(nxt)
        below = from_elements(elements)
    return Chain(tuple(elements), False)


def chain_generate(f: StepFunction, fuel: int) -> HSet:
    """The canonical ``f``-compatible well-order, cut off after ``fuel`` steps."""
    return chain_elements(f, fuel).order()


def leq_gen(f: StepFunction, x: HSet, y: HSet, fuel: Optional[int] = None) -> TriBool:
    """Whether some ``f``-compatible well-order contains ``x`` and ``y`` with ``x <= y``.

    For the identity step the answer is decided exactly without fuel: the
    compatible chain is the sequence of numerals, so ``x`` and ``y`` must be
    numerals with ``x <= y``.  Other step functions are searched along the
    canonical chain for at most ``fuel`` steps.
    """
    if f is ID:
        nx, ny = as_natural(x), as_natural(y)
        ok = nx is not None and ny is not None and nx <= ny
        return TriBool.TRUE if ok else TriBool.FALSE
    chain = chain_elements(f, get_limits().fuel if fuel is None else fuel)
    where = {e: i for i, e in enumerate(chain.elements)}
    if x in where and y in where:
        return TriBool.TRUE if where[x] <= where[y] else TriBool.FALSE
    return TriBool.FALSE if chain.degenerate else TriBool.UNKNOWN


def is_ordinal(o: HSet) -> bool:
    """Transitive set all of whose elements are transitive."""
    if o.code is not None and o.code < (1 << 64):
        return _core.code_is_ordinal(o.code)
    return _transitive(o) and all(_transitive(e) for e in o.elems)


_transitive_cache: "weakref.WeakKeyDictionary[HSet, bool]" = weakref.WeakKeyDictionary()


def _transitive(x: HSet) -> bool:
    ok = _transitive_cache.get(x)
    if ok is None:
        ok = _transitive_cache[x] = all(sub(e, x) for e in x.elems)
    return ok


def ordinal_leq(o1: HSet, o2: HSet) -> bool:
    for o in (o1, o2):
        if not is_ordinal(o):
            raise PreconditionError("ordinal_leq: argument is not an ordinal")
    return sub(o1, o2)


def ordinal_lt(o1: HSet, o2: HSet) -> bool:
    return ordinal_leq(o1, o2) and o1 is not o2


_avatars: "weakref.WeakKeyDictionary[HSet, dict]" = weakref.WeakKeyDictionary()


def _avatar_table(a: HSet) -> dict:
    table = _avatars.get(a)
    if table is not None:
        return table
    _require_well_order(a, "wo_avatar")
    idx = _index(a)
    table = {}
    # elements with fewer predecessors first, so each recursive value is ready
    below = {x: punctured_downward(a, x) for x in idx.carrier}
    for x in sorted(idx.carrier, key=lambda e: len(below[e])):
        table[x] = image(below[x], table.__getitem__)
    _avatars[a] = table
    return table


def wo_avatar(a: HSet, x: HSet) -> HSet:
    """The ordinal of the initial segment below ``x``, by transfinite recursion."""
    table = _avatar_table(a)
    if x not in table:
        raise PreconditionError("wo_avatar: element is not in the carrier")
    return table[x]


def wo_ordinal(a: HSet) -> HSet:
    table = _avatar_table(a)
    return image(U(a), table.__getitem__)


STEP_FUNCTIONS = {"id": ID, "succ": succ}


def step_function(name: str, arg: Optional[HSet] = None) -> StepFunction:
    """Look up a named step function: ``id``, ``succ`` or ``const`` (needs ``arg``)."""
    if name == "const":
        if arg is None:
            raise ValueError("const needs a set argument")
        return const(arg)
    try:
        return STEP_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown step function {name!r}") from None
