import itertools
import math
from random import Random

import pytest

from qsrlab.perm import Permutation
from qsrlab.group import PermGroup, OrderExceedsLimit
from qsrlab.constructors import make_sym_alt, make_product_action


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def test_symmetric_alternating_orders():
    for n in range(3, 13):
        assert make_sym_alt(n).order() == math.factorial(n)
        assert make_sym_alt(n, alternating=True).order() == math.factorial(n) // 2


def test_trivial_group():
    g = PermGroup(4, [])
    assert g.order() == 1
    assert list(g.elements()) == [Permutation.identity(4)]


def test_enumeration_matches_itertools():
    s4 = make_sym_alt(4)
    assert set(s4.element_images()) == set(itertools.permutations(range(4)))


def test_enumeration_unique_wreath():
    for k in (3, 4, 5):
        group, _, _ = make_product_action(k, 2)
        seen = set(group.element_images(limit=10 ** 6))
        assert len(seen) == group.order()


def test_enumeration_limit():
    s5 = make_sym_alt(5)
    with pytest.raises(OrderExceedsLimit):
        list(s5.element_images(limit=10))


def test_membership_agrees_with_scan():
    a5 = make_sym_alt(5, alternating=True)
    elements = set(a5.element_images())
    s5 = make_sym_alt(5)
    for img in s5.element_images():
        assert (img in elements) == a5.contains_images(img)


def test_membership_examples():
    a5 = make_sym_alt(5, alternating=True)
    assert pc(5, (1, 2, 3)) in a5
    assert pc(5, (1, 2)) not in a5
    for g in a5.generators:
        assert g in a5


def test_random_element_uniformish():
    rng = Random(5)
    s4 = make_sym_alt(4)
    counts = {}
    for _ in range(2400):
        img = s4.random_element(rng).images
        counts[img] = counts.get(img, 0) + 1
    assert len(counts) == 24
    assert min(counts.values()) > 40  # ~100 expected per element


def test_order_divides_factorial_check():
    g = PermGroup(6, [pc(6, (1, 2, 3, 4, 5, 6))])
    assert math.factorial(6) % g.order() == 0


def test_stabilizer():
    s5 = make_sym_alt(5)
    stab = s5.stabilizer(0)
    assert stab.order() == 24
    assert all(g.images[0] == 0 for g in stab.generators)


def test_subgroup_membership_guard():
    a5 = make_sym_alt(5, alternating=True)
    with pytest.raises(ValueError):
        a5.subgroup([pc(5, (1, 2))])


def test_sift_residue():
    s4 = make_sym_alt(4)
    assert s4.sift(pc(4, (1, 2, 3))).is_identity()


def test_mathieu_dataset_orders(m11, m12):
    assert m11.group.order() == 7920
    assert m12.group.order() == 95040
