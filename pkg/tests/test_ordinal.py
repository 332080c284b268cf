import random

import pytest
from hypothesis import given, strategies as st

from hfset import gen, order, ordinal
from hfset.errors import PreconditionError, ResourceLimitError
from hfset.kernel import empty, from_ackermann, from_elements, image, ord, singleton, to_text
from hfset.notation import U
from hfset.ordinal import TriBool

from conftest import hsets
import oracles


def test_chain_examples():
    assert ordinal.chain_generate(ordinal.ID, 5) is order.membership_order(ord(5))
    c = ordinal.const(ord(2))
    assert ordinal.chain_generate(c, 5) is order.make_order(singleton(ord(2)), [(ord(2), ord(2))])
    ch = ordinal.chain_elements(c, 5)
    assert ch.degenerate and ch.elements == (ord(2),)
    assert not ordinal.chain_elements(ordinal.ID, 5).degenerate


def test_compatibility():
    assert ordinal.is_compatible(order.membership_order(ord(4)), ordinal.ID)
    assert not ordinal.is_compatible(order.canonical_well_order(singleton(singleton(ord(2)))), ordinal.ID)
    with pytest.raises(PreconditionError):
        ordinal.is_compatible(order.make_order(ord(2), []), ordinal.ID)


def test_leq_gen_examples():
    assert ordinal.leq_gen(ordinal.ID, ord(2), ord(3)) is TriBool.TRUE
    assert ordinal.leq_gen(ordinal.ID, ord(3), ord(2)) is TriBool.FALSE
    assert ordinal.leq_gen(ordinal.ID, singleton(ord(1)), ord(3)) is TriBool.FALSE
    c = ord(4)
    assert ordinal.leq_gen(ordinal.const(c), c, c, 2) is TriBool.TRUE
    assert ordinal.leq_gen(ordinal.const(c), c, ord(1), 2) is TriBool.FALSE
    assert ordinal.leq_gen(ordinal.succ, ord(9), ord(9), 3) is TriBool.UNKNOWN


def test_succ_chain():
    elems = ordinal.chain_elements(ordinal.succ, 3).elements
    e0 = ord(1)
    e1 = ordinal.succ(singleton(e0))
    assert elems == (e0, e1, ordinal.succ(from_elements([e0, e1])))


def test_fuel_limit():
    with pytest.raises(ResourceLimitError):
        ordinal.chain_elements(ordinal.ID, 10 ** 6)


def test_is_ordinal_examples():
    assert not ordinal.is_ordinal(singleton(ord(1)))
    assert all(ordinal.is_ordinal(ord(n)) for n in range(20))
    assert not ordinal.is_ordinal(from_elements([ord(19), ord(0)]))


@given(hsets())
def test_is_ordinal_oracle(x):
    assert ordinal.is_ordinal(x) == oracles.is_von_neumann(oracles.parse_text(to_text(x)))


def test_ordinal_comparison():
    assert ordinal.ordinal_leq(ord(2), ord(5))
    assert not ordinal.ordinal_leq(ord(5), ord(2))
    for j in range(13):
        for k in range(13):
            rel = [ordinal.ordinal_lt(ord(j), ord(k)), ord(j) is ord(k), ordinal.ordinal_lt(ord(k), ord(j))]
            assert sum(rel) == 1
    with pytest.raises(PreconditionError):
        ordinal.ordinal_leq(singleton(ord(1)), ord(2))


def test_avatar_on_canonical_order():
    x = from_elements([from_ackermann(k) for k in (5, 17, 300, 4000)])
    a = order.canonical_well_order(x)
    assert [ordinal.wo_avatar(a, e) for e in x.elems] == [ord(i) for i in range(4)]
    assert ordinal.wo_ordinal(a) is ord(4)
    with pytest.raises(PreconditionError):
        ordinal.wo_avatar(a, ord(7))


@given(st.randoms(use_true_random=False), st.integers(0, 12))
def test_avatar_properties(rng, n):
    a = gen.random_well_order(rng, gen.random_set_of_size(rng, n, bits=8))
    carrier = list(U(a))
    av = {x: ordinal.wo_avatar(a, x) for x in carrier}
    assert ordinal.wo_ordinal(a) is ord(n)
    assert sorted(av.values()) == [ord(k) for k in range(n)]
    for x in carrier:
        assert av[x] is image(order.punctured_downward(a, x), av.__getitem__)
        assert av[x] is ord(order.position(a, x))
    u = gen.random_subset(rng, U(a))
    assert ordinal.ordinal_leq(ordinal.wo_ordinal(order.suborder(u, a)), ordinal.wo_ordinal(a))


def test_step_function_lookup():
    assert ordinal.step_function("id") is ordinal.ID
    assert ordinal.step_function("const", ord(1))(empty()) is ord(1)
    with pytest.raises(ValueError):
        ordinal.step_function("const")
    with pytest.raises(ValueError):
        ordinal.step_function("nope")
