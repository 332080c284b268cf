import itertools

from hypothesis import given, strategies as st

from hfset import functions as fn
from hfset.kernel import empty, from_ackermann, from_elements, ord, pair_set, singleton, to_text

from conftest import hsets
import oracles

E = empty()


def test_kpair_shape():
    a, b = ord(1), ord(2)
    assert fn.kpair(a, b) is from_elements([singleton(a), pair_set(a, b)])
    assert fn.kpair(a, a) is singleton(singleton(a))
    assert fn.pr1(fn.kpair(a, b)) is a and fn.pr2(fn.kpair(a, b)) is b


def test_kpair_injective_exhaustive():
    small = [from_ackermann(k) for k in range(6)]
    pairs = {}
    for a, b in itertools.product(small, repeat=2):
        p = fn.kpair(a, b)
        assert pairs.setdefault(p, (a, b)) == (a, b)
    assert len(pairs) == 36


@given(hsets(), hsets(), hsets(), hsets())
def test_kpair_injective(a, b, c, d):
    assert (fn.kpair(a, b) is fn.kpair(c, d)) == (a is c and b is d)


@given(hsets(), hsets())
def test_pair_oracle(a, b):
    ma, mb = oracles.parse_text(to_text(a)), oracles.parse_text(to_text(b))
    expected = frozenset([frozenset([ma]), frozenset([ma, mb])])
    assert oracles.parse_text(to_text(fn.kpair(a, b))) == expected


def test_non_pairs_project_to_empty():
    for x in (E, ord(3), from_elements([ord(2), ord(3)])):
        assert not fn.is_kpair(x)
        assert fn.pr1(x) is E and fn.pr2(x) is E


def test_graph_examples():
    assert fn.graph_from_map(ord(2), lambda e: e) is from_elements([fn.kpair(ord(0), ord(0)), fn.kpair(ord(1), ord(1))])
    assert fn.range_(fn.graph_from_map(ord(3), lambda e: E)) is singleton(E)
    assert fn.domain(fn.identity_graph(ord(4))) is ord(4)


def test_V_picks_canonical_least_pair():
    a, b = ord(2), ord(1)
    g = from_elements([fn.kpair(E, a), fn.kpair(E, b)])
    least = min(g.elems)
    assert fn.V(E, g) is fn.pr2(least)
    assert fn.V(E, g) is fn.V_by_choice(E, g)
    assert not fn.is_function_graph(g)


def test_V_default():
    assert fn.V(ord(5), fn.identity_graph(ord(2))) is E
    assert fn.V(E, ord(3)) is E


@given(st.lists(hsets(6), max_size=6, unique_by=id), st.randoms(use_true_random=False))
def test_V_on_graph(dom, rng):
    d = from_elements(dom)
    values = {x: rng.choice([E, ord(1), x]) for x in d}
    g = fn.graph_from_map(d, values.__getitem__)
    assert fn.is_function_graph(g)
    assert all(fn.V(x, g) is values[x] is fn.V_by_choice(x, g) for x in d)


def test_compose_and_inverse():
    f = fn.graph_from_map(ord(3), lambda e: singleton(e))
    g = fn.inverse_graph(f)
    assert fn.compose_graphs(g, f) is fn.identity_graph(ord(3))
    assert fn.is_injective(f)
    h = fn.graph_from_map(ord(3), lambda e: E)
    assert not fn.is_injective(h)
    # restricted to points whose image lies in the domain of the outer graph
    assert fn.compose_graphs(fn.identity_graph(ord(1)), fn.identity_graph(ord(3))) is fn.identity_graph(ord(1))


@given(st.randoms(use_true_random=False))
def test_compose_associative(rng):
    dom = [ord(k) for k in range(5)]
    f, g, h = (fn.graph_from_map(ord(5), lambda e: rng.choice(dom)) for _ in range(3))
    assert fn.compose_graphs(h, fn.compose_graphs(g, f)) is fn.compose_graphs(fn.compose_graphs(h, g), f)
    for x in ord(5):
        assert fn.V(x, fn.compose_graphs(g, f)) is fn.V(fn.V(x, f), g)


def test_graph_items_sorted():
    g = fn.graph_from_map(ord(3), singleton)
    assert fn.graph_items(g) == [(ord(k), singleton(ord(k))) for k in range(3)]
