import pytest
from hypothesis import given, strategies as st

from qsrlab.perm import Permutation, CycleType, compose_images, perm_order


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


perms = st.integers(3, 12).flatmap(
    lambda n: st.permutations(list(range(n))).map(Permutation))


def paired(draw_n=st.integers(3, 10)):
    return draw_n.flatmap(
        lambda n: st.tuples(st.permutations(list(range(n))).map(Permutation),
                            st.permutations(list(range(n))).map(Permutation)))


def test_compose_convention():
    a = pc(3, (1, 2))
    b = pc(3, (2, 3))
    assert (a * b).images == (2, 0, 1)


def test_identity_and_inverse():
    g = pc(5, (1, 2, 3, 4, 5))
    e = Permutation.identity(5)
    assert (e * g) == g == (g * e)
    assert (g * g.inverse()).is_identity()


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        pc(3, (1, 2)) * pc(4, (1, 2))


def test_not_a_bijection_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 1, 3])


def test_cycle_type_examples():
    assert Permutation.identity(5).cycle_type() == CycleType.parse('1^5')
    g = pc(11, (1, 2, 3, 4, 5), (6, 7, 8, 9, 10))
    assert g.cycle_type() == CycleType.parse('1^1 5^2')
    h = pc(7, (1, 2), (3, 4), (5, 6))
    assert h.cycle_type() == CycleType.parse('1^1 2^3')
    assert h.cycle_type().degree == 7


def test_cycle_type_sum_invariant():
    g = pc(9, (1, 2, 3), (4, 5))
    assert g.cycle_type().degree == 9


@given(paired())
def test_cycle_type_conjugation_invariant(gh):
    g, h = gh
    assert g.conjugated_by(h).cycle_type() == g.cycle_type()
    assert g.inverse().cycle_type() == g.cycle_type()


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(
    st.permutations(list(range(n))), st.permutations(list(range(n))),
    st.permutations(list(range(n))))))
def test_compose_associative(triple):
    a, b, c = triple
    left = compose_images(compose_images(a, b), c)
    right = compose_images(a, compose_images(b, c))
    assert left == right


@given(perms)
def test_order_matches_power(g):
    assert (g ** g.order()).is_identity()
    assert perm_order(g.images) == g.order()


def test_parity():
    assert not pc(4, (1, 2)).is_even()
    assert pc(4, (1, 2, 3)).is_even()
    assert pc(4, (1, 2), (3, 4)).is_even()


def test_cycle_string_one_based():
    assert pc(4, (1, 2, 3)).cycle_string() == '(1,2,3)'
    assert Permutation.identity(3).cycle_string() == '()'
