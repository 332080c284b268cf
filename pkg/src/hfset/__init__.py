"""Hereditarily finite sets: a kernel of set-level axioms, functions as
graphs, tagged structures, well-orders, ordinals and cardinals."""
from hfset._core import BACKEND
from hfset.config import Limits, get_limits, limits, set_limits
from hfset.errors import (
    CompositionError,
    DuplicateTagError,
    HFError,
    InvalidTagError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    UnboundIdentifierError,
    UnknownSuiteError,
)
from hfset.kernel import (
    HSet,
    Ordering3,
    as_natural,
    canonical_cmp,
    choose,
    empty,
    equal,
    from_elements,
    from_text,
    image,
    inc,
    ord,
    powerset,
    rank,
    separation,
    size,
    sub,
    to_text,
    union_family,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Limits",
    "get_limits",
    "limits",
    "set_limits",
    "CompositionError",
    "DuplicateTagError",
    "HFError",
    "InvalidTagError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "UnboundIdentifierError",
    "UnknownSuiteError",
    "HSet",
    "Ordering3",
    "as_natural",
    "canonical_cmp",
    "choose",
    "empty",
    "equal",
    "from_elements",
    "from_text",
    "image",
    "inc",
    "ord",
    "powerset",
    "rank",
    "separation",
    "size",
    "sub",
    "to_text",
    "union_family",
]
