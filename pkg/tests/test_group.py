from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import group, small_catalog
from cdlattice.errors import (
    IndexOutOfRange,
    MalformedCycle,
    NoIdentityAtZero,
    NotAssociative,
    NotASubgroup,
    NotLatinSquare,
    NotSquare,
    OrderCapExceeded,
    ParentMismatch,
    PointOutOfRange,
)
from cdlattice.group import (
    Subgroup,
    center,
    centralizer,
    commutes,
    direct_product,
    group_from_cayley_table,
    group_from_permutations,
    induced_group,
    join,
    parse_permutation,
    set_product,
    subgroup_closure,
    subgroup_from_elements,
    verify_group_axioms,
)
from cdlattice.subgroups import all_subgroups

# Q8 numbering: 1 = i, 2 = -1, 4 = j, 5 = k
I, MINUS_ONE, J = 1, 2, 4


def test_trivial_table():
    g = group_from_cayley_table([[0]], "1")
    assert g.order == 1 and g.inverse == (0,)


def test_z2_table():
    g = group_from_cayley_table([[0, 1], [1, 0]], "Z2")
    assert g.order == 2 and g.is_abelian and g.inverse == (0, 1)


def test_latin_square_violation_order_8():
    table = [list(r) for r in group("C8").table]
    table[3][5] = table[3][6]
    with pytest.raises(NotLatinSquare) as exc:
        group_from_cayley_table(table)
    assert exc.value.witness == (3, 5, 6)


def test_identity_not_at_zero():
    # Z2 with the identity stored at index 1
    with pytest.raises(NoIdentityAtZero):
        group_from_cayley_table([[1, 0], [0, 1]])


def test_non_associative_latin_square():
    # a loop of order 5 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as exc:
        group_from_cayley_table(table)
    a, b, c = exc.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_sampled_associativity_catches_nothing_on_a_group():
    verify_group_axioms(group("D16").table, exhaustive_limit=4)


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 2], [1, 0]]])
def test_malformed_tables(table):
    with pytest.raises(NotSquare):
        group_from_cayley_table(table)


def test_table_order_cap():
    with pytest.raises(OrderCapExceeded):
        group_from_cayley_table(group("C8").table, cap=4)


def test_order_cap_env(monkeypatch):
    monkeypatch.setenv("CDLAT_ORDER_CAP", "5")
    with pytest.raises(OrderCapExceeded):
        group_from_permutations(["(1 2 3)", "(1 2)"], 3)


def test_permutations_s3():
    g = group_from_permutations(["(1 2 3)", "(1 2)"], 3)
    assert g.order == 6 and not g.is_abelian


def test_permutations_empty_generators():
    assert group_from_permutations([], 4).order == 1


def test_permutations_c4():
    g = group_from_permutations(["(1 2 3 4)"], 4)
    assert g.order == 4 and g.is_abelian


def test_permutations_bfs_numbering():
    g = group_from_permutations(["(1 2 3)", "(1 2)"], 3)
    # BFS: 1, then (1 2 3), then (1 2), then (1 2 3)^2, ...
    assert g.table[0][1] == 1 and g.table[1][1] == 3 and g.element_order(2) == 2


def test_cycles_compose_left_to_right():
    # (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
    assert parse_permutation("(1 2)(2 3)", 3) == (2, 0, 1)


@pytest.mark.parametrize("text", ["(1 2", "1 2", "(1 x)", "(1 1 2)"])
def test_malformed_cycles(text):
    with pytest.raises(MalformedCycle):
        parse_permutation(text, 3)


def test_point_out_of_range():
    with pytest.raises(PointOutOfRange):
        parse_permutation("(1 4)", 3)


def test_generated_permutation_groups_pass_axioms():
    for name in ("S4", "A5", "S5"):
        verify_group_axioms(group(name).table)


def test_closure_examples(q8, s3):
    assert subgroup_closure(q8, []).order == 1
    assert set(subgroup_closure(q8, [I]).elements) == oracles.bfs_closure(q8, [I]) == {0, 1, 2, 3}
    involution = next(x for x in range(6) if s3.element_order(x) == 2)
    rotation = next(x for x in range(6) if s3.element_order(x) == 3)
    assert subgroup_closure(s3, [involution, rotation]) == s3.whole


def test_closure_index_out_of_range(q8):
    with pytest.raises(IndexOutOfRange):
        subgroup_closure(q8, [8])


def test_centralizer_examples(q8, s3):
    assert centralizer(q8, q8.trivial) == q8.whole
    assert centralizer(q8, subgroup_closure(q8, [MINUS_ONE])) == q8.whole
    c3 = subgroup_closure(s3, [1])
    assert centralizer(s3, c3) == c3 and c3.order == 3


def test_centralizer_parent_mismatch(q8, s3):
    with pytest.raises(ParentMismatch):
        centralizer(q8, s3.whole)


def test_center_examples(q8, s3):
    assert center(group("C6")) == group("C6").whole
    assert set(center(q8).elements) == {0, MINUS_ONE}
    assert center(s3).order == 1


def test_commutes_examples(q8):
    z = center(q8)
    for h in all_subgroups(q8):
        assert commutes(z, h)
    assert not commutes(subgroup_closure(q8, [I]), subgroup_closure(q8, [J]))
    g, ea, eb = direct_product(group("S3"), group("Q8"))
    assert commutes(ea.image(), eb.image())


def test_set_product_examples(q8, s3):
    h = subgroup_closure(q8, [I])
    assert set_product(h, q8.trivial) == (h.bits, True)
    twos = [h for h in all_subgroups(s3) if h.order == 2]
    bits, ok = set_product(twos[0], twos[1])
    assert bin(bits).count("1") == 4 and not ok
    bits, ok = set_product(h, subgroup_closure(q8, [J]))
    assert bits == q8.full_bits and ok


def test_subgroup_from_elements_rejects_non_subgroups(q8):
    with pytest.raises(NotASubgroup):
        subgroup_from_elements(q8, [0, 1])


def test_direct_product_examples(q8):
    g, _, _ = direct_product(group("C2"), group("C3"))
    assert g.order == 6 and g.is_abelian
    g, ea, eb = direct_product(q8, q8)
    assert g.order == 64 and center(g).order == 4
    verify_group_axioms(g.table)
    g, _, eb = direct_product(group("C1"), group("S3"))
    assert g.table == group("S3").table and eb.mapping == {i: i for i in range(6)}


def test_direct_product_embeddings(q8):
    g, ea, eb = direct_product(q8, group("S3"))
    ea.validate()
    eb.validate()
    a, b = ea.image(), eb.image()
    assert (a & b).order == 1 and commutes(a, b)


def test_direct_product_cap():
    with pytest.raises(OrderCapExceeded):
        direct_product(group("C8"), group("C8"), cap=32)


def test_induced_group_keeps_identity(q8):
    h = subgroup_closure(q8, [I])
    sub, incl = induced_group(h)
    assert sub.order == 4 and sub.is_abelian
    incl.validate()
    assert incl(0) == 0


# -- invariants ---------------------------------------------------------------


@pytest.mark.parametrize("g", small_catalog(64), ids=lambda g: g.name)
def test_catalog_groups_satisfy_axioms(g):
    verify_group_axioms(g.table)
    assert all(g.table[x][g.inverse[x]] == 0 for x in range(g.order))


@pytest.mark.parametrize("g", small_catalog(32), ids=lambda g: g.name)
def test_center_and_centralizers_agree_with_oracle(g):
    z = center(g)
    assert set(z.elements) == oracles.center(g)
    for h in all_subgroups(g):
        c = centralizer(g, h)
        assert set(c.elements) == oracles.centralizer(g, h.elements)
        assert z <= c
        assert oracles.closed(g, frozenset(c.elements))


@pytest.mark.parametrize("g", small_catalog(32), ids=lambda g: g.name)
def test_product_size_identity(g):
    subs = all_subgroups(g).items
    for h, k in itertools.combinations_with_replacement(subs, 2):
        bits, closed = set_product(h, k)
        assert bin(bits).count("1") * (h & k).order == h.order * k.order
        assert set(oracles.set_product(g, h.elements, k.elements)) == set(
            i for i in range(g.order) if bits >> i & 1
        )
        assert closed == oracles.closed(g, oracles.set_product(g, h.elements, k.elements))


@pytest.mark.parametrize("g", small_catalog(24), ids=lambda g: g.name)
def test_centralizer_is_antitone(g):
    subs = all_subgroups(g).items
    cent = {h: centralizer(g, h) for h in subs}
    for h in subs:
        for k in subs:
            if h <= k:
                assert cent[k] <= cent[h]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["Q8", "D8", "S4", "A4", "D12", "X+27", "Q16"]), st.data())
def test_join_matches_bfs_closure(name, data):
    g = group(name)
    seed_a = data.draw(st.lists(st.integers(0, g.order - 1), max_size=3))
    seed_b = data.draw(st.lists(st.integers(0, g.order - 1), max_size=3))
    h, k = subgroup_closure(g, seed_a), subgroup_closure(g, seed_b)
    assert set(h.elements) == oracles.bfs_closure(g, seed_a)
    assert set(join(h, k).elements) == oracles.bfs_closure(g, seed_a + seed_b)


def test_subgroup_equality_is_by_bitset(q8):
    a = Subgroup(q8, 0b1111)
    b = subgroup_from_elements(q8, [3, 2, 1, 0])
    assert a == b and hash(a) == hash(b) and len({a, b}) == 1
