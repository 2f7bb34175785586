"""Acceptance suite: the nine headline checks, with runtime budgets.

Each test runs one check from ``wittzeta.checks`` and prints a single
pass/fail line (visible under ``pytest -s`` and in captured output).  The
checks themselves raise ``CheckFailure`` with the first violated identity,
so a red test names the exact broken guarantee.  Three checks also carry
wall-clock budgets, asserted here.
"""

import time

from wittzeta.checks import CRITERIA

LIMITS = {"witt-ring-axioms": 30.0, "sym-projective-line": 10.0, "generating-series": 10.0}
TABLE = dict(CRITERIA)


def _run(name):
    start = time.perf_counter()
    try:
        detail = TABLE[name]()
    except AssertionError:
        print(f"{name}: FAIL ({time.perf_counter() - start:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    print(f"{name}: PASS ({elapsed:.2f}s) - {detail}")
    limit = LIMITS.get(name)
    if limit is not None:
        assert elapsed < limit, f"{name} took {elapsed:.2f}s, budget is {limit:.0f}s"


def test_criterion_1_witt_ring_axioms():
    _run("witt-ring-axioms")


def test_criterion_2_ghost_roundtrip():
    _run("ghost-roundtrip")


def test_criterion_3_sym_projective_line():
    _run("sym-projective-line")


def test_criterion_4_sym_plane_reconstruction():
    _run("sym-plane-reconstruction")


def test_criterion_5_generating_series():
    _run("generating-series")


def test_criterion_6_sym_enumeration_oracle():
    _run("sym-enumeration-oracle")


def test_criterion_7_product_and_base_change():
    _run("product-and-base-change")


def test_criterion_8_poincare_measure():
    _run("poincare-measure")


def test_criterion_9_two_route_zeta():
    _run("two-route-zeta")


def test_all_nine_criteria_are_covered():
    assert len(CRITERIA) == 9
