"""Resource limits.

Limits live in a context variable so concurrent tasks can run under
different settings; :func:`limits` temporarily overrides them.
"""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses


@dataclasses.dataclass(frozen=True)
class Limits:
    max_size: int = 65536
    # tag encodings nest ord(26) inside kpairs, so 24 is too small
    max_rank: int = 128
    max_powerset: int = 16
    fuel: int = 64
    max_fuel: int = 4096
    max_print: int = 1_000_000


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("hfset_limits", default=Limits())


def get_limits() -> Limits:
    return _current.get()


def set_limits(**changes) -> Limits:
    new = dataclasses.replace(_current.get(), **changes)
    _current.set(new)
    return new


@contextlib.contextmanager
def limits(**changes):
    token = _current.set(dataclasses.replace(_current.get(), **changes))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
