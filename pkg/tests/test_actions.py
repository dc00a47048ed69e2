import math
from random import Random

import pytest

from qsrlab.perm import Permutation
from qsrlab.group import PermGroup
from qsrlab.constructors import make_sym_alt, make_product_action
from qsrlab.actions import (
    natural_action, ksubset_action, partition_action, coset_action,
    block_systems, induced_block_action, iterated_block_systems,
    partition_count,
)


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def test_ksubset_degrees():
    s5 = make_sym_alt(5)
    assert ksubset_action(s5, 2).degree == 10
    s13 = make_sym_alt(13)
    assert ksubset_action(s13, 6).degree == math.comb(13, 6)


def test_ksubset_faithful_and_words():
    s6 = make_sym_alt(6)
    act = ksubset_action(s6, 2)
    assert act.is_faithful()
    assert act.check_words(Random(0))


def test_partition_degrees():
    s6 = make_sym_alt(6)
    assert partition_action(s6, 3).degree == 10
    s10 = make_sym_alt(10)
    assert partition_action(s10, 5).degree == 126
    assert partition_count(12, 3) == 15400


def test_partition_requires_divisor():
    with pytest.raises(ValueError):
        partition_action(make_sym_alt(7), 3)


def test_coset_action_point_stabilizer_is_natural():
    s4 = make_sym_alt(4)
    h = PermGroup(4, [pc(4, (2, 3)), pc(4, (2, 3, 4))], name='S3')
    act = coset_action(s4, h)
    assert act.degree == 4
    assert act.check_words(Random(1))
    # the coset action is permutation-equivalent to the natural one: the
    # map H*g -> image of the stabilized point under g intertwines them
    table = act.coset_table
    relabel = [rep[0] for rep in table.reps]
    assert sorted(relabel) == [0, 1, 2, 3]
    for s, img in zip(s4.generators, act.gen_images):
        for i, rep in enumerate(table.reps):
            assert s.images[relabel[i]] == relabel[img.images[i]]


def test_coset_action_vs_ksubsets():
    # stabilizer of a k-subset gives an action isomorphic to the k-subset one
    for n, k in ((5, 2), (6, 2), (7, 3), (8, 3)):
        sym = make_sym_alt(n)
        gens = []
        if k >= 2:
            gens += [pc(n, (1, 2))]
        if k >= 3:
            gens += [pc(n, tuple(range(1, k + 1)))]
        gens += [pc(n, (k + 1, k + 2))]
        if n - k >= 3:
            gens += [pc(n, tuple(range(k + 1, n + 1)))]
        h = PermGroup(n, gens, name='set stabilizer')
        assert h.order() == math.factorial(k) * math.factorial(n - k)
        act = coset_action(sym, h)
        sub = ksubset_action(sym, k)
        assert act.degree == sub.degree
        # equivariant relabelling: coset H*g corresponds to {1..k}^g
        base = frozenset(range(k))
        relabel = {}
        for i, rep in enumerate(act.coset_table.reps):
            relabel[i] = tuple(sorted(rep[x] for x in base))
        assert len(set(relabel.values())) == act.degree
        for s, img_c, img_s in zip(sym.generators, act.gen_images, sub.gen_images):
            for i in range(act.degree):
                moved = tuple(sorted(s.images[x] for x in relabel[i]))
                assert moved == relabel[img_c.images[i]]


def test_coset_action_non_subgroup_rejected():
    a5 = make_sym_alt(5, alternating=True)
    bad = PermGroup(5, [pc(5, (1, 2))])
    with pytest.raises(ValueError):
        coset_action(a5, bad)


def test_block_systems_primitive():
    s4 = make_sym_alt(4)
    assert block_systems(natural_action(s4)) == []


def test_block_systems_cyclic6():
    c6 = PermGroup(6, [pc(6, (1, 2, 3, 4, 5, 6))])
    systems = block_systems(natural_action(c6))
    sizes = sorted(len(s[0]) for s in systems)
    assert sizes == [2, 3]
    all_systems = iterated_block_systems(natural_action(c6))
    assert sorted(len(s[0]) for s in all_systems) == [2, 3]


def test_product_action_grid_blocks():
    # the full wreath product in product action is primitive (the top swap
    # exchanges the two grid directions); the base group preserves both
    # grid systems
    group, _, pa = make_product_action(3, 2)
    assert block_systems(pa.action()) == []
    base_systems = block_systems(natural_action(pa.base_group))
    grid = [s for s in base_systems if len(s) == 3]
    assert len(grid) == 2


def test_induced_block_action():
    c6 = PermGroup(6, [pc(6, (1, 2, 3, 4, 5, 6))])
    act = natural_action(c6)
    system = [s for s in block_systems(act) if len(s) == 3][0]
    induced = induced_block_action(act, system)
    assert induced.degree == 3
    g = c6.generators[0]
    assert induced.act(g).order() == 3
    assert induced.act(Permutation.identity(6)).is_identity()


def test_induced_block_action_invariance_guard():
    s4 = make_sym_alt(4)
    act = natural_action(s4)
    with pytest.raises(ValueError):
        induced_block_action(act, [(0, 1), (2, 3)]).act(pc(4, (2, 3)))


def test_degree_bookkeeping_coset(m11):
    g = m11.group
    h = m11.subgroup('A6.2_3')
    act = coset_action(g, h.group)
    assert act.degree == 11 == g.order() // h.order()


def test_canonical_rep_is_coset_invariant(m11):
    g = m11.group
    h = m11.subgroup('L2(11)')
    table = coset_action(g, h.group).coset_table
    rng = Random(6)
    for _ in range(60):
        x = g.random_element(rng)
        u = h.group.random_element(rng)
        left = table.canonical(x.images)
        shifted = table.canonical((u * x).images)
        assert left == shifted
        # and the canonical representative lies in the coset: r*x^-1 in H
        assert h.group.contains_images(
            tuple((x.inverse()).images[v] for v in left))
