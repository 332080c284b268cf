"""Tags, structure objects and the underlying-set function.

A tag is a lowercase word plus an arity.  It is encoded as a cons list
built from Kuratowski pairs (nil is the empty set): one numeral
``ord(0..25)`` per letter, followed by the terminator
``kpair(ord(26), ord(arity))``.  A structure object is a function graph
whose domain is a set of encoded tags.
"""
from __future__ import annotations

import dataclasses
import string
import weakref
from typing import Iterable, Optional, Sequence

from hfset.errors import DuplicateTagError, InvalidTagError
from hfset.functions import V, _split, domain, is_function_graph, kpair
from hfset.kernel import HSet, as_natural, empty, from_elements, ord

LETTERS = string.ascii_lowercase
_TERMINATOR = 26


@dataclasses.dataclass(frozen=True, order=True)
class Nota:
    letters: str
    arity: int

    def __post_init__(self):
        if not self.letters or any(c not in LETTERS for c in self.letters):
            raise InvalidTagError(f"tag letters must be a nonempty word over a..z: {self.letters!r}")
        if not isinstance(self.arity, int) or self.arity < 0:
            raise InvalidTagError(f"tag arity must be a natural number: {self.arity!r}")

    def __str__(self):
        return f"#{self.letters}.{self.arity}"


def tag(letters: str, arity: int) -> Nota:
    return Nota(letters, arity)


_encoded: dict = {}


def encode_tag(t: Nota) -> HSet:
    x = _encoded.get(t)
    if x is None:
        items = [ord(LETTERS.index(c)) for c in t.letters]
        items.append(kpair(ord(_TERMINATOR), ord(t.arity)))
        x = empty()
        for item in reversed(items):
            x = kpair(item, x)
        _encoded[t] = x
    return x


_decoded: "weakref.WeakKeyDictionary[HSet, Optional[Nota]]" = weakref.WeakKeyDictionary()


def decode_tag(x: HSet) -> Optional[Nota]:
    if x in _decoded:
        return _decoded[x]
    out = _decode(x)
    _decoded[x] = out
    return out


def _decode(x: HSet) -> Optional[Nota]:
    letters = []
    node = x
    while True:
        parts = _split(node)
        if parts is None:
            return None
        head, rest = parts
        n = as_natural(head)
        if n is not None and n < _TERMINATOR:
            letters.append(LETTERS[n])
            node = rest
            continue
        term = _split(head)
        if term is None or rest is not empty() or not letters:
            return None
        marker, arity = term
        if as_natural(marker) != _TERMINATOR:
            return None
        k = as_natural(arity)
        if k is None:
            return None
        return Nota("".join(letters), k)


Underlying = tag("undrl", 0)
Plus = tag("plus", 2)
Times = tag("times", 2)
Mult = tag("mult", 2)
Source = tag("src", 0)
Target = tag("trg", 0)
Mapping = tag("map", 0)
OrderGraph = tag("leq", 2)

STANDARD_TAGS = {
    "Underlying": Underlying,
    "Plus": Plus,
    "Times": Times,
    "Mult": Mult,
    "Source": Source,
    "Target": Target,
    "Mapping": Mapping,
    "OrderGraph": OrderGraph,
}


def tag_set(tags: Iterable[Nota]) -> HSet:
    return from_elements(encode_tag(t) for t in tags)


Dom_Ring = tag_set([Underlying, Plus, Times])
Dom_Module = tag_set([Underlying, Plus, Mult])
Dom_Algebra = tag_set([Underlying, Plus, Times, Mult])


def make_struct(assoc: Sequence[tuple]) -> HSet:
    seen = set()
    for t, _ in assoc:
        if t in seen:
            raise DuplicateTagError(f"tag {t} bound twice")
        seen.add(t)
    return from_elements(kpair(encode_tag(t), v) for t, v in assoc)


def struct_domain(s: HSet) -> HSet:
    return domain(s)


def is_struct(s: HSet) -> bool:
    return is_function_graph(s) and all(decode_tag(t) is not None for t in domain(s))


def field(a: HSet, t: Nota) -> HSet:
    """Value of the structure ``a`` at tag ``t``."""
    return V(encode_tag(t), a)


def U(a: HSet) -> HSet:
    return V(encode_tag(Underlying), a)


def ev_chain(f: HSet, args: Sequence[HSet]) -> HSet:
    for x in args:
        f = V(x, f)
    return f


def operation(a: HSet, t: Nota, *args: HSet) -> HSet:
    """Apply the curried operation stored at tag ``t``; shared by every structure."""
    return ev_chain(field(a, t), args)


def plus(a: HSet, x: HSet, y: HSet) -> HSet:
    return operation(a, Plus, x, y)


def times(a: HSet, x: HSet, y: HSet) -> HSet:
    return operation(a, Times, x, y)


def mult(a: HSet, x: HSet, y: HSet) -> HSet:
    """Scalar multiplication; one definition serves modules and algebras alike."""
    return ev_chain(V(encode_tag(Mult), a), [x, y])


def curry_table(carrier: HSet, op) -> HSet:
    """Curried graph ``x -> (y -> op(x, y))`` over ``carrier``."""
    return from_elements(
        kpair(x, from_elements(kpair(y, op(x, y)) for y in carrier)) for x in carrier
    )


def arity_ok(t: Nota, args: Sequence[HSet]) -> bool:
    """True when ``t`` is used with exactly its declared number of arguments."""
    return len(args) == t.arity
