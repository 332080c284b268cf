import random

import pytest
from hypothesis import given, strategies as st

from hfset import _core, _purecore

speedups = pytest.importorskip("hfset._speedups")


def random_rows(rng: random.Random, n: int) -> list:
    rows = [(1 << i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.3:
                rows[i] |= 1 << j
    return rows


def chain_rows(perm: list) -> list:
    n = len(perm)
    pos = {p: k for k, p in enumerate(perm)}
    return [sum(1 << j for j in range(n) if pos[i] <= pos[j]) for i in range(n)]


def test_backend_selected():
    assert _core.BACKEND in ("cython", "python")


@given(st.integers(min_value=0, max_value=(1 << 70)))
def test_code_kernels_agree(code):
    assert speedups.code_members(code) == _purecore.code_members(code)
    assert speedups.code_is_transitive(code) == _purecore.code_is_transitive(code)
    assert speedups.code_is_ordinal(code) == _purecore.code_is_ordinal(code)


def test_ordinal_codes_exhaustive():
    fast = [c for c in range(1 << 16) if speedups.code_is_ordinal(c)]
    slow = [c for c in range(1 << 16) if _purecore.code_is_ordinal(c)]
    assert fast == slow == [0, 1, 3, 11, 2059]


@pytest.mark.parametrize("seed", range(40))
def test_row_kernels_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 12)
    for rows in (random_rows(rng, n), chain_rows(rng.sample(range(n), n))):
        assert speedups.rows_is_order(rows) == _purecore.rows_is_order(rows)
        assert speedups.rows_is_total(rows) == _purecore.rows_is_total(rows)
        assert speedups.rows_maximal(rows) == _purecore.rows_maximal(rows)
        assert speedups.rows_all_subsets_have_least(rows) == _purecore.rows_all_subsets_have_least(rows)
        masks = [rng.getrandbits(n) for _ in range(20)] if n else [0]
        assert speedups.rows_subsets_have_least(rows, masks) == _purecore.rows_subsets_have_least(rows, masks)
        for mask in masks:
            assert speedups.rows_least_in(rows, mask) == _purecore.rows_least_in(rows, mask)
        for j in range(n):
            assert speedups.rows_strictly_below(rows, j) == _purecore.rows_strictly_below(rows, j)


def test_wide_rows_fall_back():
    rng = random.Random(3)
    perm = rng.sample(range(70), 70)
    rows = chain_rows(perm)
    assert speedups.rows_is_order(rows) and speedups.rows_is_total(rows)
    assert speedups.rows_maximal(rows) == _purecore.rows_maximal(rows) == [perm[-1]]


def test_chain_rows_are_well_ordered():
    rows = chain_rows([2, 0, 1])
    assert _purecore.rows_all_subsets_have_least(rows)
    assert _purecore.rows_least_in(rows, 0b011) == 0
    assert _purecore.rows_least_in(rows, 0b111) == 2
