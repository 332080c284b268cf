"""Hereditarily finite sets with a canonical, interned representation.

Every :class:`HSet` is built through :func:`from_elements` (or a function
that calls it), which deduplicates and sorts the members under
:func:`canonical_cmp` and interns the result.  Two sets are extensionally
equal exactly when they are the same Python object, so ``==`` and ``hash``
fall back to identity.

The canonical order is the order of Ackermann codes
``A(x) = sum(2 ** A(e) for e in x)``.  Codes are cached for sets whose
members all have codes below ``2 ** 16`` (this covers every set of rank at
most 5); larger sets are compared structurally, member by member from the
top, which yields the same order without materializing the code.
"""
from __future__ import annotations

import enum
import functools
import itertools
import threading
import weakref
from typing import Callable, Iterable, Iterator, Optional

from hfset import _core
from hfset.config import get_limits
from hfset.errors import ResourceLimitError

CODE_BITS = 1 << 16


class Ordering3(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class HSet:
    """An immutable hereditarily finite set.

    ``elems`` holds the members ascending in canonical order.  Do not call
    the constructor; use :func:`from_elements`, :func:`empty` and friends.
    """

    __slots__ = ("elems", "code", "rank", "_members", "__weakref__")

    elems: tuple
    code: Optional[int]
    rank: int

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator["HSet"]:
        return iter(self.elems)

    def __contains__(self, x) -> bool:
        if len(self.elems) <= 8:
            return any(x is e for e in self.elems)
        members = self._members
        if members is None:
            members = self._members = frozenset(self.elems)
        return x in members

    def __lt__(self, other: "HSet") -> bool:
        return _cmp(self, other) < 0

    def __le__(self, other: "HSet") -> bool:
        return _cmp(self, other) <= 0

    def __gt__(self, other: "HSet") -> bool:
        return _cmp(self, other) > 0

    def __ge__(self, other: "HSet") -> bool:
        return _cmp(self, other) >= 0

    def __reduce__(self):
        return (from_elements, (list(self.elems),))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self) -> str:
        if text_length(self) <= 200:
            return f"HSet({to_text(self)})"
        return f"HSet(<size {len(self.elems)}, rank {self.rank}>)"


_table: "weakref.WeakValueDictionary[tuple, HSet]" = weakref.WeakValueDictionary()
_lock = threading.Lock()


def _cmp(a: HSet, b: HSet) -> int:
    if a is b:
        return 0
    ca, cb = a.code, b.code
    if ca is not None:
        if cb is not None:
            return -1 if ca < cb else 1
        return -1
    if cb is not None:
        return 1
    # sets of rank <= r occupy an initial segment of the codes
    if a.rank != b.rank:
        return -1 if a.rank < b.rank else 1
    ea, eb = a.elems, b.elems
    i, j = len(ea) - 1, len(eb) - 1
    while i >= 0 and j >= 0:
        x, y = ea[i], eb[j]
        if x is not y:
            return _cmp(x, y)
        i -= 1
        j -= 1
    return (i >= 0) - (j >= 0)


_sort_key = functools.cmp_to_key(_cmp)


def _intern(elems: tuple) -> HSet:
    """Return the unique HSet with the given sorted, duplicate-free members."""
    found = _table.get(elems)
    if found is not None:
        return found
    lim = get_limits()
    if len(elems) > lim.max_size:
        raise ResourceLimitError(f"set of size {len(elems)} exceeds max size {lim.max_size}")
    rank = 1 + max(e.rank for e in elems) if elems else 0
    if rank > lim.max_rank:
        raise ResourceLimitError(f"set of rank {rank} exceeds max rank {lim.max_rank}")
    code: Optional[int] = 0
    for e in elems:
        if e.code is None or e.code >= CODE_BITS:
            code = None
            break
        code |= 1 << e.code
    with _lock:
        found = _table.get(elems)
        if found is not None:
            return found
        obj = object.__new__(HSet)
        obj.elems = elems
        obj.code = code
        obj.rank = rank
        obj._members = None
        _table[elems] = obj
        return obj


def _sorted_unique(xs: Iterable[HSet]) -> tuple:
    uniq = set(xs)
    for x in uniq:
        if not isinstance(x, HSet):
            raise TypeError(f"not an HSet: {x!r}")
    if all(x.code is not None for x in uniq):
        return tuple(sorted(uniq, key=lambda x: x.code))
    return tuple(sorted(uniq, key=_sort_key))


def canonical_cmp(a: HSet, b: HSet) -> Ordering3:
    return Ordering3(_cmp(a, b))


def empty() -> HSet:
    return _intern(())


def from_elements(xs: Iterable[HSet]) -> HSet:
    return _intern(_sorted_unique(xs))


def singleton(x: HSet) -> HSet:
    return _intern((x,))


def pair_set(a: HSet, b: HSet) -> HSet:
    """The unordered pair ``{a, b}``."""
    return from_elements((a, b))


def inc(x: HSet, y: HSet) -> bool:
    return x in y


def sub(a: HSet, b: HSet) -> bool:
    if a is b:
        return True
    if len(a) > len(b):
        return False
    if a.code is not None and b.code is not None:
        return a.code & ~b.code == 0
    return all(x in b for x in a.elems)


def equal(a: HSet, b: HSet) -> bool:
    return a is b


def size(x: HSet) -> int:
    return len(x.elems)


def rank(x: HSet) -> int:
    return x.rank


def union(a: HSet, b: HSet) -> HSet:
    return from_elements(itertools.chain(a.elems, b.elems))


def intersection(a: HSet, b: HSet) -> HSet:
    return _intern(tuple(x for x in a.elems if x in b))


def difference(a: HSet, b: HSet) -> HSet:
    return _intern(tuple(x for x in a.elems if x not in b))


def union_family(s: HSet) -> HSet:
    return from_elements(e for x in s.elems for e in x.elems)


def powerset(s: HSet) -> HSet:
    lim = get_limits()
    if len(s) > lim.max_powerset:
        raise ResourceLimitError(
            f"powerset of a {len(s)}-element set exceeds the limit of {lim.max_powerset}"
        )
    subsets = (
        _intern(combo)
        for k in range(len(s) + 1)
        for combo in itertools.combinations(s.elems, k)
    )
    return from_elements(subsets)


def separation(s: HSet, pred: Callable[[HSet], bool]) -> HSet:
    return _intern(tuple(x for x in s.elems if pred(x)))


def image(s: HSet, f: Callable[[HSet], HSet]) -> HSet:
    return from_elements(f(a) for a in s.elems)


def choose(pred: Callable[[HSet], bool], s: HSet) -> HSet:
    """Least member of ``s`` satisfying ``pred``; the empty set if none does."""
    for x in s.elems:
        if pred(x):
            return x
    return empty()


_numerals: list = []
_numeral_lock = threading.Lock()


def ord(n: int) -> HSet:  # noqa: A001 - mirrors the numeral constructor name
    """The von Neumann numeral ``{0, 1, ..., n-1}``."""
    if n < 0:
        raise ValueError("numerals are natural numbers")
    if n > get_limits().max_rank:
        raise ResourceLimitError(f"ord({n}) exceeds max rank {get_limits().max_rank}")
    if n < len(_numerals):
        return _numerals[n]
    with _numeral_lock:
        if not _numerals:
            _numerals.append(empty())
        while len(_numerals) <= n:
            prev = _numerals[-1]
            _numerals.append(_intern(prev.elems + (prev,)))
        return _numerals[n]


def as_natural(x: HSet) -> Optional[int]:
    n = len(x.elems)
    if x.rank != n:
        return None
    for i, e in enumerate(x.elems):
        if e.rank != i or e is not ord(i):
            return None
    return n


def is_transitive(x: HSet) -> bool:
    if x.code is not None and x.code < (1 << 64):
        return _core.code_is_transitive(x.code)
    return all(sub(e, x) for e in x.elems)


def ackermann(x: HSet) -> int:
    """The Ackermann code of ``x`` (only available for cached codes)."""
    if x.code is None:
        raise ResourceLimitError("Ackermann code too large to materialize")
    return x.code


def from_ackermann(code: int) -> HSet:
    """Decode an Ackermann code back into a set."""
    if code < 0:
        raise ValueError("codes are natural numbers")
    return _intern(tuple(from_ackermann(k) for k in _core.code_members(code)))


# --- canonical text form ---------------------------------------------------

_length_cache: "weakref.WeakKeyDictionary[HSet, int]" = weakref.WeakKeyDictionary()


def text_length(x: HSet) -> int:
    """Length of ``to_text(x)`` without building the string."""
    cached = _length_cache.get(x)
    if cached is not None:
        return cached
    n = len(x.elems)
    total = 2 + max(n - 1, 0) + sum(text_length(e) for e in x.elems)
    _length_cache[x] = total
    return total


def to_text(x: HSet) -> str:
    """Canonical text: ``{}`` or ``{e1,...,ek}`` ascending, no whitespace."""
    limit = get_limits().max_print
    if text_length(x) > limit:
        raise ResourceLimitError(
            f"canonical text of {text_length(x)} characters exceeds max print {limit}"
        )
    memo: dict = {}

    def go(s: HSet) -> str:
        out = memo.get(s)
        if out is None:
            out = memo[s] = "{" + ",".join(go(e) for e in s.elems) + "}"
        return out

    return go(x)


def from_text(text: str) -> HSet:
    """Parse the canonical text form (element order and whitespace are free)."""
    stack: list = []
    result = None
    # state: "start", "open" (just after '{'), "comma", "elem" (after a member)
    state = "start"
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if result is not None:
            raise ValueError(f"trailing input at offset {pos}")
        if ch == "{" and state in ("start", "open", "comma"):
            stack.append([])
            state = "open"
        elif ch == "}" and state in ("open", "elem"):
            done = from_elements(stack.pop())
            if stack:
                stack[-1].append(done)
                state = "elem"
            else:
                result = done
        elif ch == "," and state == "elem":
            state = "comma"
        else:
            raise ValueError(f"unexpected {ch!r} at offset {pos}")
    if result is None:
        raise ValueError("incomplete set text")
    return result
