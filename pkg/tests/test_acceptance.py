"""Exit criteria, each run at full size with its 60 second budget.

Run ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion as it finishes; the lines are repeated in the terminal summary.
"""
import subprocess
import sys
import time

import pytest

from hfset.cli.suites import run_suite

pytestmark = pytest.mark.acceptance

BUDGET_S = 60.0
SEED = 20240601

# (number, label, suite, size)
CRITERIA = [
    (1, "axioms: 1000 random sets of rank <= 5 per property", "axioms", 1000),
    (2, "numerals: n <= 12", "numerals", 12),
    (3, "ordinal characterization: every set of rank <= 4", "characterization", 1),
    (4, "wo_avatar / wo_ordinal: 500 well-orders of size <= 12", "ordinal", 500),
    (5, "suborder lemma: 500 random (a, u)", "ordinal", 500),
    (6, "cardinality vs brute-force bijection search: 500 sets of size <= 32", "cardinal", 500),
    (7, "mutual injections give a bijection: 200 cases of size <= 64", "bcs", 200),
    (8, "finite Zorn: 500 random orders plus all orders on <= 4 points", "order", 500),
    (9, "notation: 1000 tags, 3x3 tables, structure domains", "notation", 1000),
    (10, "umorphism laws: 200 triples over carriers <= 6", "umorphism", 200),
    (11, "print/parse round trip: 1000 sets of rank <= 5", "roundtrip", 1000),
]

# criteria 4 and 5 are separate properties inside one suite run
_PROPS = {
    4: {"wo_ordinal-is-numeral", "avatar-bijective", "avatar-increasing", "avatar-recursion"},
    5: {"suborder_wo_ordinal_decreasing"},
    8: {"zorn-maximal", "zorn-exhaustive", "is-order-exhaustive"},
    9: {"tag-injective", "mult-triple-V", "Dom_Ring", "Dom_Module", "Dom_Algebra"},
}

_cache: dict = {}


def _report(suite: str, size: int):
    key = (suite, size)
    if key not in _cache:
        start = time.perf_counter()
        report = run_suite(suite, size, SEED)
        _cache[key] = (report, time.perf_counter() - start)
    return _cache[key]


@pytest.mark.parametrize("number,label,suite,size", CRITERIA, ids=[f"c{c[0]:02d}-{c[2]}" for c in CRITERIA])
def test_criterion(number, label, suite, size, acceptance_log):
    report, elapsed = _report(suite, size)
    props = _PROPS.get(number, set(report.counts))
    missing = props - set(report.counts)
    failed = [(p, w) for p, w in report.failures if p in props]
    checks = sum(report.counts.get(p, 0) for p in props)
    ok = not missing and not failed and elapsed < BUDGET_S
    line = (f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {label}  "
            f"[{checks} checks, {len(failed)} failures, {elapsed:.1f}s]")
    print(line)
    acceptance_log.append(line)
    assert not missing, f"properties never checked: {sorted(missing)}"
    assert not failed, report.render()
    assert elapsed < BUDGET_S


def test_criterion_11_cli_rerun_is_byte_identical(acceptance_log):
    cmd = [sys.executable, "-m", "hfset", "check", "--suite", "roundtrip", "--size", "200", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = first == second and b"PASS" in first
    line = f"criterion 11 {'PASS' if ok else 'FAIL'}  byte-identical CLI rerun under a fixed seed"
    print(line)
    acceptance_log.append(line)
    assert ok
