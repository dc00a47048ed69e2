from random import Random

import pytest

from qsrlab.perm import Permutation
from qsrlab.group import PermGroup
from qsrlab.constructors import make_sym_alt
from qsrlab.actions import natural_action, ksubset_action, partition_action, coset_action
from qsrlab.structure import conjugacy_classes, SubgroupHandle
from qsrlab.qsr import (
    is_qsr_direct, is_qsr_fusion, is_qsr_normalizer, fixed_points_formula,
    fixed_points_split_check, fixed_points_manning, scan_action,
    predict_sym_alt,
)


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def test_direct_examples():
    nat3 = natural_action(make_sym_alt(3))
    cert = is_qsr_direct(nat3, pc(3, (1, 2)))
    assert cert is not None and cert.order == 2 and cert.fixed_point == 2

    nat7 = natural_action(make_sym_alt(7))
    assert is_qsr_direct(nat7, pc(7, (1, 2, 3, 4), (5, 6))) is None
    assert is_qsr_direct(nat7, pc(7, (1, 2), (3, 4), (5, 6))) is not None
    assert is_qsr_direct(nat7, Permutation.identity(7)) is None


def test_direct_m11_order5(m11):
    act = natural_action(m11.group)
    rng = Random(0)
    x = None
    while x is None:
        e = m11.group.random_element(rng)
        if e.order() % 5 == 0:
            x = e ** (e.order() // 5)
    cert = is_qsr_direct(act, x)
    assert cert is not None
    assert str(x.cycle_type()) == '1^1 5^2'


def test_degree_one_action(m11):
    g = m11.group
    act = coset_action(g, PermGroup(11, g.generators))
    assert act.degree == 1
    x = g.generators[0]
    assert is_qsr_direct(act, x) is not None


def test_prime_order_guard(m11):
    act = coset_action(m11.group, m11.subgroup('A6.2_3').group)
    act.stabilizer = m11.subgroup('A6.2_3')
    with pytest.raises(ValueError):
        is_qsr_fusion(act, Permutation.identity(11))


def test_routes_agree_m11(m11):
    g = m11.group
    rng = Random(0)
    for handle in m11.subgroups:
        action = coset_action(g, handle.group)
        action.stabilizer = handle
        for p in (2, 3, 5, 11):
            for c in conjugacy_classes(g, order_filter=p, rng=rng):
                direct = is_qsr_direct(action, c.rep) is not None
                assert direct == is_qsr_fusion(action, c.rep, class_orbit=c.orbit)
                assert direct == is_qsr_normalizer(action, c.rep,
                                                   class_orbit=c.orbit)


def test_fixed_point_formula_s4():
    s4 = PermGroup(4, make_sym_alt(4).generators)
    h = SubgroupHandle(s4, [pc(4, (2, 3)), pc(4, (2, 3, 4))], name='S3')
    assert fixed_points_formula(s4, h, pc(4, (1, 2, 3))) == 1
    assert fixed_points_formula(s4, h, pc(4, (1, 2))) == 2
    assert fixed_points_split_check(s4, h, pc(4, (1, 2))) == 2
    # derangement: a 4-cycle moves every coset
    assert fixed_points_formula(s4, h, pc(4, (1, 2, 3, 4))) == 0


def test_fixed_point_formula_all_classes_s5():
    s5 = PermGroup(5, make_sym_alt(5).generators)
    h = SubgroupHandle(s5, [pc(5, (2, 3)), pc(5, (2, 3, 4, 5))], name='S4')
    act = coset_action(s5, h.group)
    for c in conjugacy_classes(s5):
        direct = len(act.act(c.rep).fixed_points())
        assert fixed_points_formula(s5, h, c.rep) == direct
        assert fixed_points_split_check(s5, h, c.rep) == direct


def test_manning_matches_direct(m11):
    g = m11.group
    rng = Random(1)
    for handle in m11.subgroups:
        action = coset_action(g, handle.group)
        for p in (2, 3, 5, 11):
            if handle.order() % p:
                continue
            for hc in handle.element_order_classes(p):
                count = fixed_points_manning(g, handle, hc['rep'])
                assert count == len(action.act(hc['rep']).fixed_points())


def test_manning_k_equals_h():
    # K = H fixes |N_G(H):H| cosets
    s4 = PermGroup(4, make_sym_alt(4).generators)
    v4 = SubgroupHandle(s4, [pc(4, (1, 2), (3, 4)), pc(4, (1, 3), (2, 4))],
                        name='V4')
    act = coset_action(s4, v4.group)
    x = pc(4, (1, 2), (3, 4))
    # V4 is normal, so every coset is fixed by any of its elements' powers
    assert fixed_points_manning(s4, v4, x) == len(act.act(x).fixed_points())


def test_scan_examples():
    rng = Random(0)
    s9 = make_sym_alt(9)
    rep = scan_action(ksubset_action(s9, 2), [2, 3, 5, 7], rng=rng)
    assert rep.qsr_primes == [7]
    assert rep.verdicts[3].reason == 'congruence filter'

    s10 = make_sym_alt(10)
    rep = scan_action(partition_action(s10, 5), [2, 3, 5, 7], rng=rng)
    assert rep.qsr_primes == [5]
    types = {c.source_cycle_type for c in rep.verdicts[5].qsr_classes}
    assert types == {'1^5 5^1', '5^2'}

    s9part = scan_action(partition_action(make_sym_alt(9), 3), [2, 3, 5, 7],
                         rng=rng)
    assert s9part.qsr_primes == [3]
    types = {c.source_cycle_type for c in s9part.verdicts[3].qsr_classes}
    assert types == {'1^3 3^2'}


def test_scan_sylow_filter(m12):
    g = m12.group
    handle = m12.subgroup('2^(1+4):S3')
    act = coset_action(g, handle.group)
    act.stabilizer = handle
    rep = scan_action(act, [2, 3, 5, 11], rng=Random(0))
    assert rep.qsr_primes == []
    assert rep.verdicts[3].reason in ('congruence filter', 'sylow filter')


def test_necessity_congruence():
    # no qsr report may violate degree = 1 mod order
    rep = scan_action(ksubset_action(make_sym_alt(8), 2), [2, 3, 5, 7],
                      rng=Random(0))
    for p, v in rep.verdicts.items():
        for cls in v.qsr_classes:
            assert (28 - 1) % cls.certificate.order == 0


def test_predictions():
    assert predict_sym_alt(10, 'ksubsets', 3)['primes'] == {7}
    got = predict_sym_alt(25, 'partitions', 5)
    assert got['primes'] == {5} and got['types'][5] == {'1^5 5^4'}
    assert 2 in predict_sym_alt(9, 'ksubsets', 1, alternating=True)['primes']
    assert 2 not in predict_sym_alt(11, 'ksubsets', 1, alternating=True)['primes']
    assert predict_sym_alt(12, 'partitions', 3)['primes'] == set()
    assert predict_sym_alt(6, 'ksubsets', 2)['primes'] == set()


def test_certificate_consistency(m12):
    g = m12.group
    handle = m12.subgroup('M11')
    act = coset_action(g, handle.group)
    act.stabilizer = handle
    rep = scan_action(act, [11], rng=Random(0))
    assert rep.class_count(11) == 2
    for cls in rep.verdicts[11].qsr_classes:
        cert = cls.certificate
        assert cert.cycle_length == cert.order == 11
        assert (act.degree - 1) % cert.order == 0
