import math

import pytest

from qsrlab.perm import Permutation
from qsrlab.constructors import (
    make_sym_alt, make_product_action, sd_fixed_coset_count, make_sd_small,
    make_hs_type, gl32_fano_group, agl32_group, alt4_matrix_action,
    s0_affine_action, sl25_affine_action, agammal1_action,
)
from qsrlab.actions import DomainBudgetError
from qsrlab.qsr import is_qsr_direct


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def test_sym_alt_examples():
    assert make_sym_alt(3).order() == 6
    assert make_sym_alt(4, alternating=True).order() == 12
    assert make_sym_alt(11, alternating=True).order() == 19958400


def test_product_action_orders():
    for (k, ell, want) in ((3, 2, 72), (5, 2, 28800), (3, 3, 1296)):
        group, in_base, pa = make_product_action(k, ell)
        assert group.order() == want
        assert pa.base_group.order() == math.factorial(k) ** ell


def test_product_action_bounds():
    with pytest.raises(ValueError):
        make_product_action(2, 2)
    with pytest.raises(DomainBudgetError):
        make_product_action(20, 4)


def test_product_action_base_predicate_and_components():
    group, in_base, pa = make_product_action(3, 2)
    h = pa.embed_pair([pc(3, (1, 2)), pc(3, (1, 2, 3))],
                      Permutation.identity(2))
    assert in_base(h)
    assert pa.component(h, 0) == pc(3, (1, 2))
    assert pa.component(h, 1) == pc(3, (1, 2, 3))
    top = pa.embed_pair([Permutation.identity(3)] * 2,
                        Permutation.from_cycles(2, [(0, 1)]))
    assert not in_base(top)


def test_sd_counts_alt5():
    a5 = make_sym_alt(5, alternating=True)
    expected = {2: 16, 3: 21, 5: 25, 7: 1, 11: 1, 13: 1}
    for k, want in expected.items():
        assert sd_fixed_coset_count(a5, k) == want


def test_sd_counts_whitelist_guard():
    s5 = make_sym_alt(5)  # order 120 is not a simple-group order
    with pytest.raises(ValueError):
        sd_fixed_coset_count(s5, 2)
    a5 = make_sym_alt(5, alternating=True)
    with pytest.raises(ValueError):
        sd_fixed_coset_count(a5, 4)  # k must be prime


def test_sd_small_model():
    a5 = make_sym_alt(5, alternating=True)
    inst = make_sd_small(a5, 2)
    assert inst.degree == 60
    assert len(inst.top_cycle_image.fixed_points()) == 16
    # the full model realizes T^2 with the swap on top
    assert inst.source.order() == 7200


def test_hs_type_orders_and_stabilizer():
    a5 = make_sym_alt(5, alternating=True)
    inst = make_hs_type(a5, include_swap=True)
    assert inst.degree == 60
    assert inst.source.order() == 7200
    stab = inst.source.stabilizer(inst.enumerated.identity)
    assert stab.order() == 120
    outer = Permutation.from_cycles(5, [(0, 1)])
    both = make_hs_type(a5, include_swap=True, include_outer=True,
                        outer_perm=outer)
    assert both.source.order() == 14400


def test_hs_type_requires_outer_perm():
    a5 = make_sym_alt(5, alternating=True)
    with pytest.raises(ValueError):
        make_hs_type(a5, include_outer=True)


def test_named_linear_groups():
    assert gl32_fano_group().order() == 168
    assert agl32_group().order() == 1344
    assert alt4_matrix_action().order() == 324
    assert s0_affine_action(5).order() == 400
    assert agammal1_action(8).order() == 168
    # scalar elements of the affine groups are qsr: -1 in AGL(1,7)
    g = agammal1_action(7)
    from qsrlab.actions import natural_action
    act = natural_action(g)
    found = False
    for e in g.elements():
        if e.order() == 2 and is_qsr_direct(act, e):
            found = True
            break
    assert found


def test_psl32_inside_alt7():
    a7 = make_sym_alt(7, alternating=True)
    for g in gl32_fano_group().generators:
        assert a7.contains(g)


def test_sl25_affine():
    g = sl25_affine_action(9)
    assert g.order() == 81 * 120
    g11 = sl25_affine_action(11)
    assert g11.order() == 121 * 120
    # sharply 2-transitive at q = 11: the stabilizer of the zero vector
    # is regular on the nonzero vectors
    stab = g11.stabilizer(0)
    assert stab.order() == 120
