from __future__ import annotations

import json

import pytest

from conftest import group, product_matrix, small_catalog
from cdlattice import theorems as T
from cdlattice.errors import NotCentralDecomposition
from cdlattice.group import subgroup_closure
from cdlattice.suite import DECOMPOSITION_CHECKS, GROUP_CHECKS

STATUSES = {T.PASS, T.SKIP}


@pytest.mark.parametrize("g", small_catalog(24), ids=lambda g: g.name)
def test_group_checks_never_fail_on_catalog(g):
    for check in GROUP_CHECKS:
        rep = check(g)
        assert rep.status in STATUSES, (rep.statement, rep.witness)


@pytest.mark.parametrize("name", sorted(product_matrix()))
def test_all_checks_on_matrix(name):
    g, a, b = product_matrix()[name]
    for check in GROUP_CHECKS:
        assert check(g).status in STATUSES
    for check in DECOMPOSITION_CHECKS:
        rep = check(g, a, b)
        assert rep.status in STATUSES, (rep.statement, rep.witness)
    # the theorem's hypothesis always holds, so these never skip
    for check in (T.check_thm_central_product, T.check_corollary_mstar, T.check_thm_levels, T.check_lemma_pi):
        assert check(g, a, b).status == T.PASS


def test_expected_skips():
    assert T.check_small_cd_lattice(group("Q8")).status == T.SKIP
    assert T.check_small_cd_lattice(group("S4")).status == T.PASS
    assert T.check_nonabelian_atom(group("S3")).status == T.SKIP
    assert T.check_full_transitive(group("S3")).status == T.SKIP
    assert T.check_full_transitive(group("Q8")).status == T.PASS
    g, a, b = product_matrix()["Q8*Q8"]
    assert T.check_prop_nonproper(g, a, b).status == T.SKIP
    g, a, b = product_matrix()["D8*C4"]
    assert T.check_prop_nonproper(g, a, b).status == T.PASS


def test_skip_report_carries_reason():
    rep = T.check_heights_2_3(group("S3"))
    assert rep.status == T.SKIP and "reason" in rep.witness


def test_remarks():
    assert T.check_a4_remark(group("A4")).status == T.PASS
    rep = T.check_a4_remark(group("Q8"))
    assert rep.status == T.FAIL and len(rep.witness["members"]) == 5
    g, _, _ = product_matrix()["Q8*Q8"]
    assert T.check_height_four_remark(g).status == T.PASS
    rep = T.check_height_four_remark(group("Q8"))
    assert rep.status == T.FAIL and rep.witness["height"] == 2


def test_direct_product_proposition():
    for a, b in [("Q8", "Q8"), ("Q8", "C2"), ("S3", "C3"), ("D8", "S3")]:
        rep = T.check_prop_direct(group(a), group(b))
        assert rep.status == T.PASS and rep.input == f"{a}x{b}"


def test_strict_containment_statistic(q8q8):
    rep = T.check_thm_central_product(*q8q8)
    assert rep.info == {"products": 25, "members": 67, "strict": True}


def test_mstar_values(q8q8):
    assert T.check_corollary_mstar(*q8q8).status == T.PASS


def test_an2_single_instance(q8):
    h = q8.whole
    x = subgroup_closure(q8, [1])
    assert T.check_lemma_an2(q8, h, x).status == T.PASS
    # C_G(X) must complete H to G
    assert T.check_lemma_an2(q8, x, x).status == T.SKIP


def test_non_decomposition_is_an_error(q8q8):
    g, a, _ = q8q8
    with pytest.raises(NotCentralDecomposition):
        T.check_thm_central_product(g, a, a)


def test_bundles():
    reps = T.check_structure_props(group("Q8"), label="q")
    assert len(reps) == 5 and {r.input for r in reps} == {"q"}
    reps = T.check_interval_results(group("A4"))
    assert [r.status for r in reps] == [T.PASS, T.PASS, T.SKIP]


def test_report_json_shape():
    rep = T.check_lemma_iss(group("S3"))
    doc = rep.to_json()
    assert list(doc) == ["statement", "input", "status", "witness", "ms"]
    assert doc["statement"] == "lemma-iss" and doc["input"] == "S3"
    assert rep.to_json(timings=False)["ms"] == 0
    json.dumps(doc)


def test_failure_detection_iss(monkeypatch):
    # a corrupted centralizer makes the inequality fail somewhere
    real = T.centralizer

    def broken(g, h):
        return g.whole if h.order == 2 else real(g, h)

    monkeypatch.setattr(T, "centralizer", broken)
    rep = T.check_lemma_iss(group("S3"))
    assert rep.status == T.FAIL and {"H", "K", "lhs", "rhs"} <= set(rep.witness)


def test_failure_detection_subgroups_in_cd(monkeypatch):
    from cdlattice.lattice import LiftedCD

    real = T.cd_of_subgroup

    def broken(h):
        out = real(h)
        return LiftedCD(out.lattice, out.nodes[:1], dict(list(out.heights.items())[:1]), out.depths)

    monkeypatch.setattr(T, "cd_of_subgroup", broken)
    rep = T.check_subgroups_in_cd(group("Q8"))
    assert rep.status == T.FAIL and rep.witness["missing"]

