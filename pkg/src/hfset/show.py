"""Readable, re-parseable rendering of sets.

Short sets print in canonical text.  Larger ones are rendered in the
expression language: numerals as ``ord(n)``, encoded tags as
``#word.arity``, Kuratowski pairs as ``pair(a,b)``; the output evaluates
back to the same set.
"""
from __future__ import annotations

from hfset.functions import _split
from hfset.kernel import HSet, as_natural, text_length, to_text
from hfset.notation import decode_tag

SHORT = 16


def show(x: HSet) -> str:
    memo: dict = {}

    def go(s: HSet) -> str:
        out = memo.get(s)
        if out is not None:
            return out
        if text_length(s) <= SHORT:
            out = to_text(s)
        elif as_natural(s) is not None:
            out = f"ord({as_natural(s)})"
        elif decode_tag(s) is not None:
            out = str(decode_tag(s))
        else:
            parts = _split(s)
            if parts is not None:
                out = f"pair({go(parts[0])},{go(parts[1])})"
            else:
                out = "{" + ",".join(go(e) for e in s.elems) + "}"
        memo[s] = out
        return out

    return go(x)
