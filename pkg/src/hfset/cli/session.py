"""Evaluation of expressions and execution of REPL statements."""
from __future__ import annotations

import dataclasses
from typing import Optional

from hfset import cardinal, order, ordinal
from hfset.cli import syntax as ast
from hfset.config import Limits, get_limits, limits
from hfset.errors import HFError, PreconditionError, UnboundIdentifierError
from hfset.functions import kpair
from hfset.kernel import HSet, from_elements, image, ord, powerset, to_text, union_family
from hfset.notation import Nota, encode_tag
from hfset.show import show

HELP = """\
expressions: {a,b,...}  ord(n)  pair(a,b)  pow(e)  union(e)  im(fun x -> body, e)
             #word.arity  order(carrier; (u,v),...)  name
statements:  let name = expr
verbs:       card e | ordinal? e | woord order | zorn order | bcs x y f g
             chain id|succ|const(e) fuel | show e | help"""


@dataclasses.dataclass
class SessionEnv:
    bindings: dict = dataclasses.field(default_factory=dict)
    limits: Limits = dataclasses.field(default_factory=get_limits)
    seed: int = 0


def evaluate(e: ast.Expr, env: SessionEnv, local: Optional[dict] = None) -> HSet:
    with limits(**dataclasses.asdict(env.limits)):
        return _eval(e, env, local or {})


def _eval(e, env: SessionEnv, local: dict) -> HSet:
    if isinstance(e, ast.SetLit):
        return from_elements(_eval(x, env, local) for x in e.items)
    if isinstance(e, ast.Ord):
        return ord(e.n)
    if isinstance(e, ast.Pair):
        return kpair(_eval(e.left, env, local), _eval(e.right, env, local))
    if isinstance(e, ast.Pow):
        return powerset(_eval(e.arg, env, local))
    if isinstance(e, ast.Union):
        return union_family(_eval(e.arg, env, local))
    if isinstance(e, ast.Im):
        carrier = _eval(e.arg, env, local)
        fn = e.fn
        return image(carrier, lambda x: _eval(fn.body, env, {**local, fn.param: x}))
    if isinstance(e, ast.TagLit):
        return encode_tag(Nota(e.word, e.arity))
    if isinstance(e, ast.Ident):
        if e.name in local:
            return local[e.name]
        if e.name in env.bindings:
            return env.bindings[e.name]
        raise UnboundIdentifierError(f"unbound identifier {e.name!r}")
    if isinstance(e, ast.OrderLit):
        carrier = _eval(e.carrier, env, local)
        pairs = [(_eval(u, env, local), _eval(v, env, local)) for u, v in e.pairs]
        return order.make_order(carrier, pairs)
    raise TypeError(f"not an expression: {e!r}")


def print_canonical(x: HSet) -> str:
    return to_text(x)


def execute(stmt, env: SessionEnv) -> Optional[str]:
    """Run one parsed statement; returns the text to print, if any."""
    if stmt is None:
        return None
    with limits(**dataclasses.asdict(env.limits)):
        if isinstance(stmt, ast.Let):
            env.bindings[stmt.name] = _eval(stmt.expr, env, {})
            return None
        if isinstance(stmt, ast.Verb):
            return _verb(stmt, env)
        return to_text(_eval(stmt, env, {}))


def _args(stmt: ast.Verb, env: SessionEnv, n: int) -> list:
    if len(stmt.args) != n:
        raise PreconditionError(f"{stmt.name} takes {n} argument(s), got {len(stmt.args)}")
    return [_eval(a, env, {}) for a in stmt.args]


def _verb(stmt: ast.Verb, env: SessionEnv) -> str:
    name = stmt.name
    if name == "help":
        return HELP
    if name == "card":
        (x,) = _args(stmt, env, 1)
        return to_text(cardinal.cardinality(x))
    if name == "ordinal?":
        (x,) = _args(stmt, env, 1)
        return "true" if ordinal.is_ordinal(x) else "false"
    if name == "woord":
        (a,) = _args(stmt, env, 1)
        return to_text(ordinal.wo_ordinal(a))
    if name == "zorn":
        (a,) = _args(stmt, env, 1)
        return to_text(order.maximal_element(a))
    if name == "show":
        (x,) = _args(stmt, env, 1)
        return show(x)
    if name == "bcs":
        x, y, f, g = _args(stmt, env, 4)
        return to_text(cardinal.bcs(x, y, f, g).graph)
    if name == "chain":
        step, fuel = stmt.args
        arg = _eval(step.arg, env, {}) if step.arg is not None else None
        chain = ordinal.chain_elements(ordinal.step_function(step.name, arg), fuel)
        text = " < ".join(to_text(e) for e in chain.elements) or "(empty chain)"
        if chain.degenerate:
            text += "  # stopped: next element repeats"
        return text
    raise HFError(f"unknown verb {name!r}")
