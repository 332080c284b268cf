"""Seeded property suites behind ``hfset check``.

Each suite draws its cases from ``random.Random(seed)`` and records every
property it checks.  Failing cases keep a counterexample rendered as text,
so a report is reproducible byte for byte from ``(name, size, seed)``.
"""
from __future__ import annotations

import dataclasses
import functools
import random
from typing import Callable, Optional

from hfset import cardinal, functions as fn, gen, notation as nt, order, ordinal, umorphism as um
from hfset.cli import syntax
from hfset.cli.session import SessionEnv, evaluate, execute
from hfset.errors import UnknownSuiteError
from hfset.kernel import (
    HSet,
    Ordering3,
    canonical_cmp,
    choose,
    empty,
    equal,
    from_ackermann,
    from_elements,
    image,
    inc,
    ord,
    rank,
    singleton,
    size,
    sub,
    text_length,
    to_text,
    union,
    union_family,
)
from hfset.show import show


def describe(*xs) -> str:
    out = []
    for x in xs:
        if isinstance(x, HSet):
            out.append(to_text(x) if text_length(x) <= 2000 else show(x))
        else:
            out.append(str(x))
    return " ; ".join(out)


@dataclasses.dataclass
class SuiteReport:
    name: str
    size: int
    seed: int
    counts: dict = dataclasses.field(default_factory=dict)
    failures: list = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, prop: str, ok: bool, *witness) -> bool:
        self.counts[prop] = self.counts.get(prop, 0) + 1
        if not ok:
            self.failures.append((prop, describe(*witness)))
        return ok

    def render(self, max_failures: int = 10) -> str:
        status = "PASS" if self.passed else "FAIL"
        total = sum(self.counts.values())
        lines = [f"suite {self.name} size={self.size} seed={self.seed}: {status} "
                 f"({total} checks, {len(self.failures)} failures)"]
        for prop in sorted(self.counts):
            bad = sum(1 for p, _ in self.failures if p == prop)
            lines.append(f"  {prop}: {self.counts[prop] - bad}/{self.counts[prop]}")
        for prop, text in self.failures[:max_failures]:
            lines.append(f"  counterexample [{prop}]: {text}")
        return "\n".join(lines)


# --- independent oracles ----------------------------------------------------


def find_bijection(xs: list, ys: list) -> Optional[dict]:
    """Backtracking search for a bijection between two lists of distinct sets."""
    assignment: dict = {}
    used: set = set()

    def go(i: int) -> bool:
        if len(xs) - i > len(ys) - len(used):
            return False
        if i == len(xs):
            return len(used) == len(ys)
        for y in ys:
            if y not in used:
                assignment[xs[i]] = y
                used.add(y)
                if go(i + 1):
                    return True
                used.discard(y)
                del assignment[xs[i]]
        return False

    return dict(assignment) if go(0) else None


def brute_force_cardinal(x: HSet) -> HSet:
    """First numeral ``ord(k)`` admitting a bijection with ``x``."""
    k = 0
    while True:
        numeral = ord(k)
        match = find_bijection(list(x), list(numeral))
        if match is not None:
            assert set(match) == set(x) and set(match.values()) == set(numeral)
            return numeral
        k += 1


def brute_is_order(n: int, leq_pairs: set) -> bool:
    pts = range(n)
    return (
        all((i, i) in leq_pairs for i in pts)
        and all(not ((i, j) in leq_pairs and (j, i) in leq_pairs) for i in pts for j in pts if i != j)
        and all(
            (i, k) in leq_pairs
            for i in pts for j in pts for k in pts
            if (i, j) in leq_pairs and (j, k) in leq_pairs
        )
    )


def is_bijection(graph: HSet, x: HSet, y: HSet) -> bool:
    """Functional, injective, total on ``x`` and onto ``y``; by enumeration."""
    pairs = [(fn.pr1(p), fn.pr2(p)) for p in graph]
    if not all(fn.is_kpair(p) for p in graph):
        return False
    firsts = [a for a, _ in pairs]
    seconds = [b for _, b in pairs]
    return (
        len(set(firsts)) == len(firsts)
        and len(set(seconds)) == len(seconds)
        and set(firsts) == set(x)
        and set(seconds) == set(y)
    )


# --- suites -----------------------------------------------------------------


def _rebuild(x: HSet) -> HSet:
    """Reconstruct ``x`` from its members in reverse order."""
    return from_elements(reversed([_rebuild(e) for e in x]))


def suite_axioms(r: SuiteReport, rng: random.Random, n: int) -> None:
    preds = [
        ("nonempty", lambda k: (lambda e: len(e) > 0)),
        ("rank>=k", lambda k: (lambda e: rank(e) >= k)),
        ("has-empty", lambda k: (lambda e: inc(empty(), e))),
        ("size=k", lambda k: (lambda e: size(e) == k)),
        ("never", lambda k: (lambda e: False)),
    ]
    maps = [
        ("singleton", lambda c: singleton),
        ("union", lambda c: union_family),
        ("size-numeral", lambda c: (lambda e: ord(size(e)))),
        ("diagonal-pair", lambda c: (lambda e: fn.kpair(e, e))),
        ("constant", lambda c: (lambda e: c)),
        ("adjoin", lambda c: (lambda e: union(e, singleton(c)))),
    ]
    for _ in range(n):
        a = gen.random_hset(rng, 5)
        b = _rebuild(a) if rng.random() < 0.3 else gen.random_hset(rng, 5)
        c = gen.random_hset(rng, 5)
        same = equal(a, b)
        r.check("extensionality", same == (sub(a, b) and sub(b, a)) == (canonical_cmp(a, b) is Ordering3.EQ), a, b)
        r.check("extensionality-structural", same == (to_text(a) == to_text(b)), a, b)
        r.check("order-trichotomy", sum(canonical_cmp(a, b) is o for o in Ordering3) == 1 and canonical_cmp(a, b) == -canonical_cmp(b, a), a, b)
        if canonical_cmp(a, b) <= 0 and canonical_cmp(b, c) <= 0:
            r.check("order-transitive", canonical_cmp(a, c) <= 0, a, b, c)
        r.check("regularity", not inc(a, a) and not any(inc(a, e) for e in a), a)

        pname, pmake = rng.choice(preds)
        pred = pmake(rng.randint(0, 4))
        witnesses = [e for e in a if pred(e)]
        chosen = choose(pred, a)
        if witnesses:
            r.check("choice-epsilon", pred(chosen) and chosen is min(witnesses, key=functools.cmp_to_key(canonical_cmp)), pname, a)
        else:
            r.check("choice-default", chosen is empty(), pname, a)

        mname, mmake = rng.choice(maps)
        f = mmake(c)
        im = image(a, f)
        r.check("replacement-IM_inc", all(inc(f(x), im) for x in a), mname, a)
        r.check("replacement-IM_exists", all(any(f(x) is y for x in a) for y in im), mname, a)
        probe = gen.random_hset(rng, 3) if rng.random() < 0.5 else f(c)
        r.check("replacement-membership", inc(probe, im) == any(f(x) is probe for x in a), mname, a, probe)


def suite_numerals(r: SuiteReport, rng: random.Random, n: int) -> None:
    bound = 12
    for k in range(bound + 1):
        r.check("size", size(ord(k)) == k, k)
        r.check("successor", ord(k + 1) is union(ord(k), singleton(ord(k))), k)
        r.check("successor-membership", all(inc(x, ord(k + 1)) == (inc(x, ord(k)) or x is ord(k)) for x in ord(k + 2)), k)
        for j in range(bound + 1):
            r.check("membership-order", inc(ord(j), ord(k)) == (j < k), j, k)
            r.check("injective", (ord(j) is ord(k)) == (j == k), j, k)
    r.check("zero-is-empty", not any(inc(x, ord(0)) for x in ord(bound)))


def suite_functions(r: SuiteReport, rng: random.Random, n: int) -> None:
    pool = [gen.random_hset(rng, 3, 3) for _ in range(6)]
    for _ in range(n):
        a, b, c, d = (rng.choice(pool) for _ in range(4))
        r.check("kpair-injective", (fn.kpair(a, b) is fn.kpair(c, d)) == (a is c and b is d), a, b, c, d)
        p = fn.kpair(a, b)
        r.check("projections", fn.is_kpair(p) and fn.pr1(p) is a and fn.pr2(p) is b, a, b)

        dom = gen.random_set_of_size(rng, rng.randint(0, 6), bits=8)
        cod = gen.random_set_of_size(rng, rng.randint(1, 6), bits=8)
        table = {x: rng.choice(list(cod)) for x in dom}
        g = fn.graph_from_map(dom, table.__getitem__)
        r.check("graph-domain", fn.domain(g) is dom and fn.is_function_graph(g), g)
        r.check("V-agrees", all(fn.V(x, g) is table[x] for x in dom), g)
        probe = gen.random_hset(rng, 3)
        r.check("V-by-choice", fn.V(probe, g) is fn.V_by_choice(probe, g), probe, g)
        if probe not in dom:
            r.check("V-off-domain", fn.V(probe, g) is empty(), probe, g)
        noisy = from_elements(list(g) + [fn.kpair(x, rng.choice(list(cod))) for x in dom if rng.random() < 0.3] + [probe])
        r.check("V-canonical-least", all(fn.V(x, noisy) is fn.V_by_choice(x, noisy) for x in fn.domain(noisy)), noisy)

        h = fn.graph_from_map(cod, lambda y: rng.choice(list(dom)) if len(dom) else y)
        k = fn.graph_from_map(dom, lambda x: singleton(x))
        lhs = fn.compose_graphs(k, fn.compose_graphs(h, g))
        rhs = fn.compose_graphs(fn.compose_graphs(k, h), g)
        r.check("compose-associative", lhs is rhs, g, h, k)
        r.check("compose-identity", fn.compose_graphs(fn.identity_graph(cod), g) is g and fn.compose_graphs(g, fn.identity_graph(dom)) is g, g)
        inj = gen.random_injection(rng, dom, from_elements(list(dom) + list(cod)))
        inv = fn.inverse_graph(inj)
        r.check("inverse-involution", fn.inverse_graph(inv) is inj and fn.is_function_graph(inv), inj)
        r.check("inverse-cancels", fn.compose_graphs(inv, inj) is fn.identity_graph(dom), inj)


def _op_table(rng: random.Random, carrier: HSet) -> HSet:
    values = list(carrier)
    table = {(x, y): rng.choice(values) for x in carrier for y in carrier}
    return nt.curry_table(carrier, lambda x, y: table[x, y]), table


def suite_notation(r: SuiteReport, rng: random.Random, n: int) -> None:
    seen: dict = {}
    for _ in range(n):
        t = gen.random_tag(rng)
        x = nt.encode_tag(t)
        other = seen.setdefault(x, t)
        r.check("tag-injective", other == t, str(t), str(other))
        r.check("tag-roundtrip", nt.decode_tag(x) == t, str(t))
    r.check("tag-count", len(seen) == len({tg for tg in seen.values()}))

    for _ in range(max(1, n // 10)):
        carrier = gen.random_set_of_size(rng, 3, bits=4)
        plus_g, _ = _op_table(rng, carrier)
        times_g, _ = _op_table(rng, carrier)
        mult_g, mult_t = _op_table(rng, carrier)
        algebra = nt.make_struct([(nt.Underlying, carrier), (nt.Plus, plus_g), (nt.Times, times_g), (nt.Mult, mult_g)])
        module = nt.make_struct([(nt.Underlying, carrier), (nt.Plus, plus_g), (nt.Mult, mult_g)])
        ring = nt.make_struct([(nt.Underlying, carrier), (nt.Plus, plus_g), (nt.Times, times_g)])
        tagm = nt.encode_tag(nt.Mult)
        for x in carrier:
            for y in carrier:
                literal = fn.V(y, fn.V(x, fn.V(tagm, algebra)))
                r.check("mult-triple-V", nt.mult(algebra, x, y) is literal is mult_t[x, y], x, y)
                r.check("mult-shared", nt.mult(module, x, y) is nt.mult(algebra, x, y), x, y)
        r.check("U", nt.U(ring) is carrier and nt.U(module) is carrier, carrier)
        r.check("Dom_Ring", nt.struct_domain(ring) is nt.Dom_Ring)
        r.check("Dom_Module", nt.struct_domain(module) is nt.Dom_Module)
        r.check("Dom_Algebra", nt.struct_domain(algebra) is nt.Dom_Algebra)
        r.check("missing-tag", fn.V(tagm, ring) is empty())
    displayed = {
        "Dom_Ring": ({"undrl", "plus", "times"}, nt.Dom_Ring),
        "Dom_Module": ({"undrl", "plus", "mult"}, nt.Dom_Module),
        "Dom_Algebra": ({"undrl", "plus", "times", "mult"}, nt.Dom_Algebra),
    }
    for name, (words, dom) in displayed.items():
        r.check(f"{name}-displayed", {nt.decode_tag(t).letters for t in dom} == words)


def _object(rng: random.Random, k: int) -> HSet:
    return nt.make_struct([(nt.Underlying, gen.random_set_of_size(rng, k, bits=6))])


def _umap(rng, a, b) -> HSet:
    return um.make_umorphism(a, b, gen.random_map(rng, nt.U(a), nt.U(b)))


def suite_umorphism(r: SuiteReport, rng: random.Random, n: int) -> None:
    for _ in range(n):
        a, b, c, d = (_object(rng, rng.randint(1, 6)) for _ in range(4))
        f, g, h = _umap(rng, a, b), _umap(rng, b, c), _umap(rng, c, d)
        r.check("ok", um.umorphism_ok(f) and um.umorphism_ok(g) and um.umorphism_ok(h), f)
        r.check("left-identity", um.ucompose(um.uidentity(b), f) is f, f)
        r.check("right-identity", um.ucompose(f, um.uidentity(a)) is f, f)
        gf = um.ucompose(g, f)
        r.check("compose-ok", um.umorphism_ok(gf), gf)
        r.check("associative", um.ucompose(h, gf) is um.ucompose(um.ucompose(h, g), f), f, g, h)

        k = rng.randint(1, 6)
        src, tgt = _object(rng, k), _object(rng, k)
        bij = um.make_umorphism(src, tgt, gen.random_injection(rng, nt.U(src), nt.U(tgt)))
        inv = um.uinverse(bij)
        r.check("inverse-exists", inv is not None and um.umorphism_ok(inv), bij)
        if inv is not None:
            r.check("inverse-left", um.ucompose(inv, bij) is um.uidentity(src), bij)
            r.check("inverse-right", um.ucompose(bij, inv) is um.uidentity(tgt), bij)
            r.check("inverse-involution", um.uinverse(inv) is bij, bij)
        big = _object(rng, k + 1)
        into = um.make_umorphism(src, big, gen.random_injection(rng, nt.U(src), nt.U(big)))
        r.check("no-inverse-when-not-onto", um.uinverse(into) is None, into)


def _all_orders(n: int):
    """Every order on ``n`` points, as sets of index pairs, by brute force."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    diag = {(i, i) for i in range(n)}
    for bits in range(1 << len(off)):
        rel = diag | {off[k] for k in range(len(off)) if bits >> k & 1}
        yield rel, brute_is_order(n, rel)


def suite_order(r: SuiteReport, rng: random.Random, n: int) -> None:
    for _ in range(n):
        carrier = gen.random_set_of_size(rng, rng.randint(1, 10), bits=8)
        a = gen.random_order(rng, carrier, density=rng.random())
        m = order.maximal_element(a)
        r.check("zorn-maximal", m in carrier and not any(order.lt(a, m, x) for x in carrier), a)
        maximal = [x for x in carrier if not any(order.lt(a, x, y) for y in carrier)]
        r.check("zorn-canonical-least", m is min(maximal), a)
        r.check("is-order", order.is_order(a), a)

        u = gen.random_subset(rng, carrier)
        s = order.suborder(u, a)
        r.check("suborder-coherent", nt.U(s) is u and all(order.lt(s, x, y) == order.lt(a, x, y) for x in u for y in u), a, u)

        w = order.canonical_well_order(carrier)
        r.check("canonical-well-order", order.is_well_order(w), carrier)
        if len(u):
            lo = order.least(w, u)
            r.check("least-is-min", lo is min(u) and all(order.leq(w, lo, y) for y in u), u)
        chain = from_elements(x for x in carrier if order.leq(w, x, m) or rng.random() < 0.3)
        if len(chain):
            r.check("upper-bound-of-chain", order.upper_bound(w, chain) is max(chain), chain)

    for k in range(5):
        carrier = gen.random_set_of_size(rng, k, bits=8)
        pts = list(carrier)
        for rel, expect in _all_orders(k):
            a = order.make_order(carrier, [(pts[i], pts[j]) for i, j in rel])
            r.check("is-order-exhaustive", order.is_order(a) == expect, k, sorted(rel))
            if expect and k:
                ups = {i: {j for (i2, j) in rel if i2 == i and j != i} for i in range(k)}
                maximal = [pts[i] for i in range(k) if not ups[i]]
                r.check("zorn-exhaustive", order.maximal_element(a) is min(maximal), k, sorted(rel))


def suite_characterization(r: SuiteReport, rng: random.Random, n: int) -> None:
    # the 16 sets of rank at most 3, indexed by Ackermann code
    level = [from_ackermann(k) for k in range(16)]
    chain = set(ordinal.chain_elements(ordinal.ID, 6).elements)
    found = 0
    for code in range(1 << 16):
        o = from_elements(level[k] for k in range(16) if code >> k & 1)
        via_sets = ordinal.is_ordinal(o)
        via_gen = ordinal.leq_gen(ordinal.ID, o, o) is ordinal.TriBool.TRUE
        found += via_sets
        r.check("ordinal-iff-leq_gen", via_sets == via_gen, o)
        r.check("ordinal-iff-in-chain", via_sets == (o in chain), o)
    r.check("ordinal-count", found == 5, found)


def _random_well_order(rng: random.Random, k: int) -> HSet:
    carrier = gen.random_set_of_size(rng, k, bits=rng.choice([4, 8, 16]))
    return gen.random_well_order(rng, carrier)


def suite_ordinal(r: SuiteReport, rng: random.Random, n: int) -> None:
    for _ in range(n):
        a = _random_well_order(rng, rng.randint(0, 12))
        carrier = nt.U(a)
        k = len(carrier)
        w = ordinal.wo_ordinal(a)
        av = {x: ordinal.wo_avatar(a, x) for x in carrier}
        r.check("wo_ordinal-is-numeral", w is ord(k) and ordinal.is_ordinal(w), a)
        r.check("avatar-bijective", set(av.values()) == set(w) and len(set(av.values())) == k, a)
        r.check("avatar-increasing", all(av[x] in av[y] for x in carrier for y in carrier if order.lt(a, x, y)), a)
        r.check("avatar-recursion", all(av[x] is image(order.punctured_downward(a, x), av.__getitem__) for x in carrier), a)
        r.check("avatar-saturated", all(ordinal.is_ordinal(image(order.punctured_downward(a, x), av.__getitem__)) for x in carrier), a)
        r.check("avatar-order-iso", all(order.leq(a, x, y) == sub(av[x], av[y]) for x in carrier for y in carrier), a)

        u = gen.random_subset(rng, carrier)
        r.check("suborder_wo_ordinal_decreasing",
                ordinal.ordinal_leq(ordinal.wo_ordinal(order.suborder(u, a)), w), a, u)

    for step_name, f in (("id", ordinal.ID), ("succ", ordinal.succ), ("const", ordinal.const(ord(2)))):
        for fuel in range(0, 8):
            c = ordinal.chain_generate(f, fuel)
            r.check("chain-compatible", ordinal.is_compatible(c, f) and order.is_well_order(c), step_name, fuel)


def suite_cardinal(r: SuiteReport, rng: random.Random, n: int) -> None:
    for _ in range(n):
        x = gen.random_set_of_size(rng, rng.randint(0, 32), bits=rng.choice([6, 10, 16]))
        card = cardinal.cardinality(x)
        r.check("cardinality-oracle", card is brute_force_cardinal(x), x)
        r.check("cardinality-ordinal", ordinal.is_ordinal(card), x)
        iso = cardinal.cardinal_iso(x)
        r.check("cardinal-iso-bijection", is_bijection(iso.graph, x, card), x)
        r.check("minimality", not any(cardinal.equipotent(o, x) for o in card), x)
        u = gen.random_subset(rng, x)
        r.check("subset-lemma", cardinal.subset_cardinality_leq(u, x)
                and ordinal.ordinal_leq(cardinal.cardinality(u), card), x, u)
        y = gen.random_set_of_size(rng, len(x) if rng.random() < 0.5 else rng.randint(0, 32), bits=16)
        r.check("respects-equipotence",
                cardinal.equipotent(x, y) == (cardinal.cardinality(y) is card), x, y)


def suite_bcs(r: SuiteReport, rng: random.Random, n: int) -> None:
    for _ in range(n):
        k = rng.randint(0, 64)
        x = gen.random_set_of_size(rng, k)
        y = x if rng.random() < 0.1 else gen.random_set_of_size(rng, k)
        f = gen.random_injection(rng, x, y)
        g = gen.random_injection(rng, y, x)
        w = cardinal.bcs(x, y, f, g)
        r.check("bcs-bijection", is_bijection(w.graph, x, y), x, y)
        r.check("bcs-cardinality", cardinal.cardinality(x) is cardinal.cardinality(y), x, y)


def _script(rng: random.Random, count: int) -> list:
    lines = ["let a = ord(3)", "let b = {a,{a},pair(a,{})}", "card b", "ordinal? a", "show pow(a)",
             "woord order({ord(0),ord(1)}; (ord(0),ord(0)),(ord(0),ord(1)),(ord(1),ord(1)))",
             "chain id 4", "chain const({}) 3", "im(fun e -> {e,a}, b)"]
    for _ in range(count):
        lines.append(to_text(gen.random_hset(rng, 4, 3)))
    return lines


def _run_script(lines: list) -> str:
    env = SessionEnv()
    out = []
    for line in lines:
        text = execute(syntax.parse_statement(line), env)
        if text is not None:
            out.append(text)
    return "\n".join(out)


def suite_roundtrip(r: SuiteReport, rng: random.Random, n: int) -> None:
    env = SessionEnv()
    for _ in range(n):
        x = gen.random_hset(rng, 5)
        text = to_text(x)
        tree = syntax.parse(text)
        back = evaluate(tree, env)
        r.check("eval-parse-print", back is x, x)
        r.check("print-parse-idempotent", syntax.parse(to_text(back)) == tree and to_text(back) == text, x)
        r.check("show-roundtrip", evaluate(syntax.parse(show(x)), env) is x, x)
    script = _script(random.Random(r.seed), 20)
    r.check("byte-identical-rerun", _run_script(script) == _run_script(script))


SUITES: dict = {
    "axioms": suite_axioms,
    "numerals": suite_numerals,
    "functions": suite_functions,
    "notation": suite_notation,
    "umorphism": suite_umorphism,
    "order": suite_order,
    "characterization": suite_characterization,
    "ordinal": suite_ordinal,
    "cardinal": suite_cardinal,
    "bcs": suite_bcs,
    "roundtrip": suite_roundtrip,
}


def run_suite(name: str, size: int, seed: int) -> SuiteReport:
    try:
        body: Callable = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        ) from None
    report = SuiteReport(name, size, seed)
    body(report, random.Random(seed), size)
    return report
