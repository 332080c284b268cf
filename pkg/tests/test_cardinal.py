import itertools
import random

import pytest
from hypothesis import given, strategies as st

from hfset import cardinal, functions as fn, gen, ordinal
from hfset.errors import PreconditionError
from hfset.kernel import empty, from_elements, ord, powerset, singleton


def is_bijection(graph, x, y):
    pairs = [(fn.pr1(p), fn.pr2(p)) for p in graph]
    return (
        all(fn.is_kpair(p) for p in graph)
        and sorted(a for a, _ in pairs) == sorted(x)
        and sorted(b for _, b in pairs) == sorted(y)
        and len(pairs) == len(x) == len(y)
    )


def brute_cardinal(x):
    """Smallest numeral onto which pairing off elements gives a bijection."""
    xs = list(x)
    for k in itertools.count():
        n = list(ord(k))
        pairing = dict(itertools.zip_longest(xs, n))
        if None not in pairing and None not in pairing.values() and len(set(pairing.values())) == len(n):
            return ord(k)


def test_examples():
    assert cardinal.equipotent(ord(2), from_elements([ord(5), ord(7)]))
    assert cardinal.cardinality(from_elements([empty(), singleton(empty()), singleton(singleton(empty()))])) is ord(3)
    assert cardinal.cardinality(powerset(ord(3))) is ord(8)
    assert cardinal.cardinal_iso(ord(3)).graph is fn.identity_graph(ord(3))
    assert cardinal.bijection_witness(ord(2), ord(3)) is None


@given(st.randoms(use_true_random=False), st.integers(0, 20))
def test_cardinality(rng, n):
    x = gen.random_set_of_size(rng, n)
    card = cardinal.cardinality(x)
    assert card is brute_cardinal(x) is ord(n)
    assert ordinal.is_ordinal(card)
    iso = cardinal.cardinal_iso(x)
    assert is_bijection(iso.graph, x, card)
    u = gen.random_subset(rng, x)
    assert cardinal.subset_cardinality_leq(u, x)


def test_subset_precondition():
    with pytest.raises(PreconditionError):
        cardinal.subset_cardinality_leq(ord(3), ord(2))


def test_bcs_example():
    x, y = ord(3), from_elements([ord(4), ord(5), ord(6)])
    f = fn.graph_from_map(x, lambda e: ord(len(e) + 4))
    g = fn.graph_from_map(y, lambda e: ord(6 - len(e)))
    w = cardinal.bcs(x, y, f, g)
    assert is_bijection(w.graph, x, y)
    assert w.domain is x and w.range is y


@pytest.mark.parametrize("seed", range(15))
def test_bcs_random(seed):
    rng = random.Random(seed)
    k = rng.randint(0, 40)
    x, y = gen.random_set_of_size(rng, k), gen.random_set_of_size(rng, k)
    w = cardinal.bcs(x, y, gen.random_injection(rng, x, y), gen.random_injection(rng, y, x))
    assert is_bijection(w.graph, x, y)
    assert cardinal.cardinality(x) is cardinal.cardinality(y)


def test_bcs_rejects_collision():
    x, y = ord(2), from_elements([ord(4), ord(5)])
    f = fn.graph_from_map(x, lambda e: ord(4))
    g = fn.graph_from_map(y, lambda e: ord(0))
    with pytest.raises(PreconditionError, match=r"f is not injective: \{\} and \{\{\}\} both map to ord\(4\)"):
        cardinal.bcs(x, y, f, g)
    with pytest.raises(PreconditionError, match="outside the target"):
        cardinal.bcs(x, y, fn.identity_graph(x), g)
    with pytest.raises(PreconditionError, match="domain"):
        cardinal.bcs(x, y, fn.identity_graph(ord(1)), g)
