import math
from random import Random

import pytest

from qsrlab.perm import Permutation
from qsrlab.group import PermGroup
from qsrlab.constructors import make_sym_alt
from qsrlab.structure import (
    conjugacy_classes, prime_order_classes, centralizer, centralizer_order_in,
    normalizer_of_cyclic, fusion_test, subnormaliser, is_subnormal,
    is_strongly_p_embedded, SubgroupHandle, ClassOrbit,
)


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def plain(g):
    return PermGroup(g.degree, g.generators, name=g.name)


def test_sym5_classes():
    cls = conjugacy_classes(plain(make_sym_alt(5)))
    assert len(cls) == 7  # one per partition of 5
    assert sum(c.size for c in cls) == 120
    for c in cls:
        assert c.size * c.centralizer_order == 120


def test_alt5_order5_split():
    cls = [c for c in conjugacy_classes(plain(make_sym_alt(5, True)))
           if c.element_order == 5]
    assert sorted(c.size for c in cls) == [12, 12]


def test_m11_order11_classes(m11):
    cls = conjugacy_classes(m11.group, order_filter=11, rng=Random(0))
    assert sorted(c.size for c in cls) == [720, 720]
    assert all(c.certified for c in cls)
    assert [c.label for c in cls] == ['11a', '11b']


def test_symbolic_classes_match_enumeration():
    s7 = make_sym_alt(7)
    symbolic = prime_order_classes(s7, 2)
    brute = [c for c in conjugacy_classes(plain(s7)) if c.element_order == 2]
    assert sorted(c.size for c in symbolic) == sorted(c.size for c in brute)
    a7 = make_sym_alt(7, alternating=True)
    symbolic = prime_order_classes(a7, 7)
    brute = [c for c in conjugacy_classes(plain(a7)) if c.element_order == 7]
    assert sorted(c.size for c in symbolic) == sorted(c.size for c in brute)


def test_centralizer_examples():
    s7 = plain(make_sym_alt(7))
    assert centralizer(s7, pc(7, (1, 2), (3, 4), (5, 6))).order() == 48
    assert centralizer(s7, pc(7, (1, 2, 3, 4, 5, 6, 7))).order() == 7
    assert centralizer(s7, Permutation.identity(7)).order() == math.factorial(7)


def test_centralizer_transporter_tier(m23):
    # |M23| is above the scan budget, so this exercises the transporter path
    g = m23.group
    x = g.generators[0]  # the 23-cycle
    c = centralizer(g, x)
    assert c.order() == 23


def test_normalizer_examples():
    s7 = plain(make_sym_alt(7))
    a7 = plain(make_sym_alt(7, alternating=True))
    x = pc(7, (1, 2, 3, 4, 5, 6, 7))
    assert normalizer_of_cyclic(s7, x).order() == 42
    assert normalizer_of_cyclic(a7, x).order() == 21
    # the centralizer is contained in the normalizer
    n = normalizer_of_cyclic(a7, x)
    for g in centralizer(a7, x).group.generators:
        assert n.contains(g)


def test_class_orbit_transporter(m11):
    g = m11.group
    rng = Random(2)
    x = None
    while x is None:
        e = g.random_element(rng)
        if e.order() == 8:
            x = e
    orbit = ClassOrbit(g, x.images)
    y = x.conjugated_by(g.random_element(rng))
    t = orbit.transporter_to(y.images)
    assert t is not None
    assert x.conjugated_by(Permutation(t)).images == y.images


def test_fusion_examples():
    s4 = plain(make_sym_alt(4))
    x = pc(4, (1, 2, 3))
    h_cyclic = SubgroupHandle(s4, [x], name='C3')
    assert fusion_test(s4, h_cyclic, x) is False
    h_full = SubgroupHandle(s4, s4.generators, name='S4')
    assert fusion_test(s4, h_full, x) is True


def test_fusion_m11_point_stabilizer(m11):
    g = m11.group
    h = m11.subgroup('A6.2_3')
    rng = Random(1)
    x = None
    while x is None:
        e = h.group.random_element(rng)
        if e.order() == 5:
            x = e
    assert fusion_test(g, h, x) is True


def test_subnormaliser_prime_restriction():
    s4 = plain(make_sym_alt(4))
    with pytest.raises(ValueError):
        subnormaliser(s4, pc(4, (1, 2, 3, 4)))


def test_subnormaliser_vs_bruteforce():
    s4 = plain(make_sym_alt(4))
    for x in (pc(4, (1, 2)), pc(4, (1, 2), (3, 4)), pc(4, (1, 2, 3))):
        sub = subnormaliser(s4, x)
        accepted = []
        X = PermGroup(4, [x])
        for g in s4.elements():
            u = PermGroup(4, [x, g])
            if is_subnormal(X, u):
                accepted.append(g)
        assert PermGroup(4, accepted).order() == sub.order()


def test_subnormaliser_central():
    d8 = PermGroup(4, [pc(4, (1, 2, 3, 4)), pc(4, (1, 3))])
    z = pc(4, (1, 3), (2, 4))
    assert subnormaliser(d8, z).order() == 8


def test_subnormaliser_contains_centralizer_and_fuses(m11):
    g = m11.group
    rng = Random(9)
    for p in (2, 3, 5, 11):
        x = None
        while x is None:
            e = g.random_element(rng)
            if e.order() % p == 0:
                x = e ** (e.order() // p)
        sub = subnormaliser(g, x)
        for c in centralizer(g, x).group.generators:
            assert sub.contains(c)
        # the class of x meets the subnormaliser in a single class of it
        assert fusion_test(g, sub, x) is True


def test_subnormaliser_m12_order11(m12):
    rng = Random(4)
    g = m12.group
    x = None
    while x is None:
        e = g.random_element(rng)
        if e.order() % 11 == 0:
            x = e ** (e.order() // 11)
    sub = subnormaliser(g, x)
    assert sub.order() == 55


def test_is_subnormal_examples():
    s4 = plain(make_sym_alt(4))
    d8 = PermGroup(4, [pc(4, (1, 2, 3, 4)), pc(4, (1, 3))])
    assert is_subnormal(d8, s4) is False
    v4 = PermGroup(4, [pc(4, (1, 2), (3, 4)), pc(4, (1, 3), (2, 4))])
    assert is_subnormal(v4, s4) is True
    assert is_subnormal(s4, s4) is True


def test_strongly_p_embedded_examples():
    s4 = plain(make_sym_alt(4))
    s3 = SubgroupHandle(s4, [pc(4, (1, 2)), pc(4, (1, 2, 3))], name='S3')
    assert is_strongly_p_embedded(s4, s3, 3) is True
    a4 = SubgroupHandle(s4, [pc(4, (1, 2, 3)), pc(4, (1, 2), (3, 4))], name='A4')
    assert is_strongly_p_embedded(s4, a4, 2) is False
    # p must divide |H|
    assert is_strongly_p_embedded(s4, s3, 5) is False


def test_centralizer_order_in(m11):
    h = m11.subgroup('A6.2_3')
    rng = Random(0)
    x = None
    while x is None:
        e = h.group.random_element(rng)
        if e.order() == 5:
            x = e
    assert centralizer_order_in(h, x) == 5


def test_class_sum_invariant(m12):
    # filtered classes certify against the order census
    for p in (2, 3, 5, 11):
        cls = conjugacy_classes(m12.group, order_filter=p, rng=Random(0))
        assert all(c.certified for c in cls)
        assert all(m12.group.order() % c.size == 0 for c in cls)


def test_m11_order_census_known_values(m11):
    from qsrlab.structure import order_census
    census = order_census(m11.group)
    assert census == {1: 1, 2: 165, 3: 440, 4: 990, 5: 1584, 6: 1320,
                      8: 1980, 11: 1440}


def test_symbolic_classes_more_cases():
    # certified random-powering search as the independent side
    for n, p, alternating in ((8, 2, True), (8, 2, False), (9, 3, True),
                              (10, 5, False), (6, 3, True)):
        g = make_sym_alt(n, alternating=alternating)
        symbolic = prime_order_classes(g, p)
        brute = conjugacy_classes(plain(g), order_filter=p, rng=Random(0))
        assert all(c.certified for c in brute)
        assert sorted(c.size for c in symbolic) == \
            sorted(c.size for c in brute), (n, p, alternating)
