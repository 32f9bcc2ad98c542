from __future__ import annotations

import pytest

import oracles
from conftest import group, product_matrix, small_catalog
from cdlattice.errors import EnumerationBudgetExceeded, NotNested, OrderCapExceeded, ParentMismatch
from cdlattice.group import center, subgroup_closure
from cdlattice.subgroups import all_subgroups, canonical_key, interval, subgroups_containing


@pytest.mark.parametrize(
    "name, count",
    [("C1", 1), ("C4", 3), ("C9", 3), ("C25", 3), ("Q8", 6), ("S3", 6), ("D8", 10), ("A4", 10),
     ("S4", 30), ("A5", 59), ("S5", 156), ("X+27", 19), ("X-27", 10), ("E2^5", 374)],
)
def test_subgroup_counts(name, count):
    assert len(all_subgroups(group(name))) == count


def test_a4_has_no_subgroup_of_order_6():
    assert {h.order for h in all_subgroups(group("A4"))} == {1, 2, 3, 4, 12}


def test_central_product_counts():
    g, _, _ = product_matrix()["Q8*Q8"]
    assert len(all_subgroups(g)) == 110
    g, _, _ = product_matrix()["Q8xQ8"]
    assert len(all_subgroups(g)) == 133


@pytest.mark.parametrize("g", small_catalog(16), ids=lambda g: g.name)
def test_matches_naive_subset_search(g):
    assert {frozenset(h.elements) for h in all_subgroups(g)} == oracles.naive_subgroups(g)


@pytest.mark.parametrize("g", small_catalog(32), ids=lambda g: g.name)
def test_matches_pairwise_join_closure(g):
    assert {frozenset(h.elements) for h in all_subgroups(g)} == oracles.pairwise_join_subgroups(g)


@pytest.mark.parametrize("g", small_catalog(32), ids=lambda g: g.name)
def test_canonical_order_and_containing(g):
    subs = all_subgroups(g)
    keys = [canonical_key(h.bits) for h in subs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert subs[0] == g.trivial and subs[len(subs) - 1] == g.whole
    z = center(g)
    above = subgroups_containing(g, z)
    assert above == subs.filter(lambda h: z <= h)


def test_interval_examples(q8):
    subs = all_subgroups(q8)
    minus_one = subgroup_closure(q8, [2])
    assert len(interval(subs, minus_one, q8.whole)) == 5
    assert len(interval(subs, q8.trivial, q8.whole)) == 6
    assert list(interval(subs, q8.whole, q8.whole)) == [q8.whole]


def test_interval_rejects_unnested(q8):
    with pytest.raises(NotNested):
        interval(all_subgroups(q8), subgroup_closure(q8, [1]), subgroup_closure(q8, [4]))


def test_interval_parent_mismatch(q8, s3):
    with pytest.raises(ParentMismatch):
        interval(all_subgroups(q8), q8.trivial, s3.whole)


def test_budget_exceeded():
    g = catalog_fresh("E2^4")
    with pytest.raises(EnumerationBudgetExceeded):
        all_subgroups(g, budget=10)


def test_cap_exceeded():
    with pytest.raises(OrderCapExceeded):
        all_subgroups(group("S4"), cap=12)


def test_subgroup_set_lookup(q8):
    subs = all_subgroups(q8)
    for i, h in enumerate(subs):
        assert subs.index(h) == i and subs.index(h.bits) == i and h in subs and h.bits in subs


def catalog_fresh(name):
    from cdlattice.catalog import catalog_group

    return catalog_group(name)
