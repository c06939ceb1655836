import pytest

from bckspec.constructions import (
    cbck_union,
    direct_product,
    standard_chain,
    trivial_algebra,
)
from bckspec.core import check_axioms, check_homomorphism
from bckspec.ideals import all_ideals, annihilator, is_involutory, is_simple

from oracles import brute_force_ideals


def test_standard_chain_shape():
    c1 = standard_chain(1)
    assert c1.size == 2 and c1.table == ((0, 0), (1, 0))
    c2 = standard_chain(2)
    assert c2.table[2][1] == 1
    for k in (1, 2, 3, 4):
        assert standard_chain(k).is_chain()
    with pytest.raises(ValueError):
        standard_chain(0)


def test_chains_are_simple():
    for k in (1, 2, 3):
        assert is_simple(standard_chain(k))


def test_union_operation_shape():
    u = cbck_union([standard_chain(1), standard_chain(1)])
    a = u.global_index(0, 1)
    b = u.global_index(1, 1)
    t = u.algebra.table
    assert t[a][b] == a and t[b][a] == b
    assert u.algebra.size == 3
    assert u.provenance == (None, (0, 1), (1, 1))


def test_union_size_formula():
    comps = [standard_chain(1), standard_chain(2), standard_chain(3)]
    u = cbck_union(comps)
    assert u.algebra.size == 1 + sum(c.size - 1 for c in comps)


def test_union_of_one_block_is_the_component():
    a = standard_chain(3)
    u = cbck_union([a])
    assert u.algebra == a


def test_union_rejects_empty_list():
    with pytest.raises(ValueError):
        cbck_union([])


def test_union_triple_c1_has_eight_ideals():
    u = cbck_union([standard_chain(1)] * 3)
    assert len(brute_force_ideals(u.algebra)) == 8
    assert len(all_ideals(u.algebra)) == 8


def test_union_block_embeddings_are_homomorphisms():
    comps = [standard_chain(2), standard_chain(3)]
    u = cbck_union(comps)
    for i, comp in enumerate(comps):
        h = u.block_embedding(i)
        ok, witness = check_homomorphism(comp, u.algebra, h.mapping)
        assert ok, witness


def test_union_ideals_decompose_blockwise_uniquely():
    comps = [standard_chain(1), standard_chain(2)]
    u = cbck_union(comps)
    component_ideals = [
        [frozenset(i.members) for i in all_ideals(c).ideals] for c in comps
    ]
    expected = set()
    for i0 in component_ideals[0]:
        for i1 in component_ideals[1]:
            members = {0}
            members.update(u.global_index(0, x) for x in i0)
            members.update(u.global_index(1, x) for x in i1)
            expected.add(frozenset(members))
    got = {frozenset(i.members) for i in all_ideals(u.algebra).ideals}
    assert got == expected
    assert len(expected) == len(component_ideals[0]) * len(component_ideals[1])


def test_annihilator_distributes_over_union_blocks():
    comps = [standard_chain(2), standard_chain(3)]
    u = cbck_union(comps)
    for ideal in all_ideals(u.algebra).ideals:
        star = annihilator(u.algebra, ideal.members)
        rebuilt = {0}
        for i, comp in enumerate(comps):
            block_part = {
                x for x in range(comp.size) if u.global_index(i, x) in ideal.members
            }
            piece = annihilator(comp, block_part)
            rebuilt.update(u.global_index(i, x) for x in piece.members)
        assert frozenset(rebuilt) == frozenset(star.members)


def test_union_involutory_iff_components_are():
    comps = [standard_chain(2), standard_chain(3)]
    u = cbck_union(comps)
    assert all(is_involutory(c) for c in comps)
    assert is_involutory(u.algebra)


def test_product_examples():
    p = direct_product([standard_chain(1), standard_chain(1)])
    assert p.algebra.size == 4
    assert p.algebra.top() == p.to_index((1, 1))
    q = direct_product([standard_chain(2)])
    assert q.algebra == standard_chain(2)
    pr = direct_product([standard_chain(1), standard_chain(2)])
    assert all(w is None for w in check_axioms(pr.algebra.table).values())
    with pytest.raises(ValueError):
        direct_product([])


def test_product_operation_is_componentwise():
    p = direct_product([standard_chain(1), standard_chain(2)])
    c1, c2 = p.components
    for g1 in range(p.algebra.size):
        for g2 in range(p.algebra.size):
            x1, x2 = p.to_tuple(g1)
            y1, y2 = p.to_tuple(g2)
            assert p.algebra.table[g1][g2] == p.to_index(
                (c1.table[x1][y1], c2.table[x2][y2])
            )


def test_trivial_algebra():
    t = trivial_algebra()
    assert t.size == 1 and t.top() == 0
