"""One test per acceptance criterion; each prints a PASS/FAIL line.

The expectations are the published values transcribed in
cyclemod4.reference_data, compared literally.  Criteria that the
exhaustive computation contradicts fail here with the evidence in the
printed detail.
"""
import time

from cyclemod4 import checks


def report(capsys, fn, limit):
    t = time.perf_counter()
    r = fn()
    took = time.perf_counter() - t
    with capsys.disabled():
        print(f"\n{r.line()}\t{took:.1f}s")
    assert r.passed, r.detail
    assert took < limit, f"took {took:.1f}s, limit {limit}s"


def test_criterion_01_cc_tables(capsys):
    report(capsys, checks.check_cc_tables, 1)


def test_criterion_02_shape_a_feasibility(capsys):
    report(capsys, checks.check_shape_a, 1)


def test_criterion_03_shape_b_feasibility(capsys):
    report(capsys, checks.check_shape_b, 1)
    with capsys.disabled():
        for row in checks.feasibility_divergences():
            print("\tdivergence\t" + "\t".join(row))


def test_criterion_04_minimum_orders(capsys):
    report(capsys, checks.check_min_orders, 600)


def test_criterion_05_regular_audit(capsys):
    report(capsys, checks.check_regular, 1800)


def test_criterion_06_degree_two_audit(capsys):
    report(capsys, checks.check_degree_two, 600)


def test_criterion_07_size_congruence(capsys):
    report(capsys, checks.check_congruence, 300)


def test_criterion_08_graceful_anchors(capsys):
    report(capsys, checks.check_graceful, 300)


def test_criterion_09_stop_sets(capsys):
    report(capsys, checks.check_stop_sets, 1)


def test_criterion_10_witness_soundness(capsys):
    report(capsys, checks.check_witnesses, 600)


def test_criterion_11_oracle_equivalence(capsys):
    report(capsys, checks.check_oracles, 120)
