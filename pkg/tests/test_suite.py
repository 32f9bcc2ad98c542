from __future__ import annotations

from cdlattice.suite import (
    FAMILY,
    STATEMENTS,
    Selector,
    build_input,
    run_input,
    run_suite,
    summarize,
)
from cdlattice.theorems import ERROR, FAIL, PASS, SKIP


def test_statement_ids_are_unique_and_known():
    assert len(STATEMENTS) == len(set(STATEMENTS))
    for sid in ("thm-central-product", "cor-mstar", "lemma-iss", "lemma-an1", "remark-a4", "prop-direct"):
        assert sid in STATEMENTS


def test_selector_defaults():
    names = Selector().inputs()
    assert "S4" in names and "S5" not in names and "Q8*Q8" in names and "Q8xQ8" in names
    small = Selector(max_order=16).inputs()
    assert "Q8*Q8" not in small and "D8*C4" in small and "S4" not in small
    assert Selector(names=()).inputs() == []
    assert Selector(names=("S5",)).inputs() == ["S5"]
    assert Selector(names=("nope",)).inputs() == []


def test_family_builds():
    for m in FAMILY:
        g, (a, b) = build_input(m.name)
        assert g.order == m.order()


def test_small_suite_is_green():
    reports = run_suite(Selector(max_order=12))
    counts = summarize(reports)
    assert counts[FAIL] == 0 and counts[ERROR] == 0 and counts[PASS] > 0
    keys = [(r.statement, r.input) for r in reports]
    assert keys == sorted(keys)


def test_only_filter():
    reports = run_suite(Selector(names=("Q8*Q8",), statements=("thm-central-product",)))
    assert [(r.statement, r.input, r.status) for r in reports] == [("thm-central-product", "Q8*Q8", PASS)]
    assert reports[0].info["decompositions"] == 12


def test_remarks_attached_to_their_inputs():
    reps = run_input("A4", Selector(statements=("remark-a4",)))
    assert [(r.statement, r.status) for r in reps] == [("remark-a4", PASS)]
    reps = run_input("Q8*Q8", Selector(statements=("remark-height-4",)))
    assert [(r.statement, r.status) for r in reps] == [("remark-height-4", PASS)]
    reps = run_input("Q8xC2", Selector(statements=("prop-direct",)))
    assert [(r.statement, r.status) for r in reps] == [("prop-direct", PASS)]


def test_decomposition_cap_reports_skip():
    reps = run_input("E2^4", Selector(statements=("cor-mstar",)), max_decompositions=3)
    capped = [r for r in reps if r.statement == "decompositions"]
    assert len(capped) == 1 and capped[0].status == SKIP
    assert all(r.status != FAIL for r in reps)


def test_budget_turns_into_error_report():
    reps = run_input("S4", budget=3)
    assert [(r.statement, r.status) for r in reps] == [("input", ERROR)]


def test_deterministic_json():
    a = [r.to_json(timings=False) for r in run_suite(Selector(max_order=8))]
    b = [r.to_json(timings=False) for r in run_suite(Selector(max_order=8))]
    assert a == b
