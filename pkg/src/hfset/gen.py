"""Seeded random generators for sets, orders, maps and tags."""
from __future__ import annotations

import random

from hfset.functions import kpair
from hfset.kernel import HSet, empty, from_ackermann, from_elements
from hfset.notation import LETTERS, Nota
from hfset.order import make_order


def random_hset(rng: random.Random, max_rank: int = 5, max_width: int = 4) -> HSet:
    """A random set of rank at most ``max_rank`` with at most ``max_width`` members per level."""
    if max_rank <= 0:
        return empty()
    width = rng.randint(0, max_width)
    return from_elements(
        random_hset(rng, rng.randint(0, max_rank - 1), max_width) for _ in range(width)
    )


def distinct_sets(rng: random.Random, n: int, bits: int = 16) -> list:
    """``n`` distinct random sets, decoded from distinct Ackermann codes below ``2**bits``."""
    return [from_ackermann(c) for c in rng.sample(range(1 << bits), n)]


def random_set_of_size(rng: random.Random, n: int, bits: int = 16) -> HSet:
    return from_elements(distinct_sets(rng, n, bits))


def random_subset(rng: random.Random, s: HSet) -> HSet:
    return from_elements(x for x in s.elems if rng.random() < 0.5)


def random_total_order(rng: random.Random, carrier: HSet) -> HSet:
    seq = list(carrier.elems)
    rng.shuffle(seq)
    return make_order(carrier, [(u, v) for i, u in enumerate(seq) for v in seq[i:]])


random_well_order = random_total_order


def random_order(rng: random.Random, carrier: HSet, density: float = 0.3) -> HSet:
    """A random partial order: a random DAG along a shuffled sequence, closed transitively."""
    seq = list(carrier.elems)
    rng.shuffle(seq)
    n = len(seq)
    up = [{i} for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                up[i].add(j)
    for i in reversed(range(n)):
        for j in list(up[i]):
            up[i] |= up[j]
    return make_order(carrier, [(seq[i], seq[j]) for i in range(n) for j in up[i]])


def random_injection(rng: random.Random, x: HSet, y: HSet) -> HSet:
    if len(x) > len(y):
        raise ValueError("no injection into a smaller set")
    images = rng.sample(list(y.elems), len(x))
    return from_elements(kpair(a, b) for a, b in zip(x.elems, images))


def random_map(rng: random.Random, x: HSet, y: HSet) -> HSet:
    ys = list(y.elems)
    return from_elements(kpair(a, rng.choice(ys)) for a in x.elems)


def random_tag(rng: random.Random, max_letters: int = 8, max_arity: int = 5) -> Nota:
    letters = "".join(rng.choice(LETTERS) for _ in range(rng.randint(1, max_letters)))
    return Nota(letters, rng.randint(0, max_arity))
