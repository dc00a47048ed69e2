import json

import pytest

from qsrlab.datasets import (
    parse_dataset, load_dataset, load_builtin_dataset, builtin_dataset_names,
    DatasetError,
)

MINIMAL = {
    'name': 'S3',
    'degree': 3,
    'order': '6',
    'generators': [[2, 1, 3], [2, 3, 1]],
    'subgroups': [
        {'name': 'C3', 'generators': [[2, 3, 1]], 'index': '2'},
    ],
}


def test_minimal_roundtrip(tmp_path):
    path = tmp_path / 's3.json'
    path.write_text(json.dumps(MINIMAL))
    ds = load_dataset(path)
    assert ds.group.order() == 6
    assert ds.subgroup('C3').order() == 3
    assert ds.subgroup('C3').index() == 2


def test_unknown_group_key_rejected():
    bad = dict(MINIMAL)
    bad['extra'] = 1
    with pytest.raises(DatasetError, match='unknown dataset keys'):
        parse_dataset(bad)


def test_unknown_subgroup_key_rejected():
    bad = json.loads(json.dumps(MINIMAL))
    bad['subgroups'][0]['comment'] = 'nope'
    with pytest.raises(DatasetError, match='unknown subgroup keys'):
        parse_dataset(bad)


def test_missing_key_rejected():
    bad = dict(MINIMAL)
    del bad['order']
    with pytest.raises(DatasetError, match='missing dataset keys'):
        parse_dataset(bad)


def test_non_bijection_rejected():
    bad = json.loads(json.dumps(MINIMAL))
    bad['generators'][0] = [2, 2, 3]
    with pytest.raises(DatasetError, match='not a bijection'):
        parse_dataset(bad)


def test_order_mismatch_rejected():
    bad = json.loads(json.dumps(MINIMAL))
    bad['order'] = '12'
    with pytest.raises(DatasetError, match='constructed order'):
        parse_dataset(bad)


def test_index_mismatch_rejected():
    bad = json.loads(json.dumps(MINIMAL))
    bad['subgroups'][0]['index'] = '3'
    with pytest.raises(DatasetError, match='computed index'):
        parse_dataset(bad)


def test_nonmember_subgroup_rejected():
    bad = json.loads(json.dumps(MINIMAL))
    bad['generators'] = [[2, 3, 1]]       # now the group is only C3
    bad['order'] = '3'
    bad['subgroups'] = [{'name': 'C2', 'generators': [[2, 1, 3]], 'index': '1'}]
    with pytest.raises(DatasetError, match='outside parent'):
        parse_dataset(bad)


def test_invalid_json_rejected(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{not json')
    with pytest.raises(DatasetError, match='not valid JSON'):
        load_dataset(path)


def test_builtin_names():
    names = builtin_dataset_names()
    assert names == ['m11', 'm12', 'm12_2', 'm22', 'm22_2', 'm23']


def test_builtin_orders_and_indices(m11, m12, m22, m23):
    assert m11.group.order() == 7920
    assert m11.subgroup('A6.2_3').index() == 11
    assert m12.group.order() == 95040
    assert m12.subgroup('M11').index() == 12
    assert m22.group.order() == 443520
    assert m23.group.order() == 10200960
    m12_2 = load_builtin_dataset('m12_2')
    assert m12_2.group.order() == 190080
    m22_2 = load_builtin_dataset('m22_2')
    assert m22_2.group.order() == 887040


def test_m12_two_m11_classes_distinct(m12):
    a = m12.subgroup('M11')
    b = m12.subgroup("M11'")
    # one fixes a point of the natural 12-point domain, the other acts
    # transitively, so they cannot be conjugate
    assert any(len(o) == 1 for o in a.group.orbits())
    assert b.group.is_transitive()


def test_m12_two_a6_classes_distinct(m12):
    a = m12.subgroup('A6.2^2')
    b = m12.subgroup("A6.2^2'")
    assert sorted(len(o) for o in a.group.orbits()) == [2, 10]
    assert b.group.is_transitive()


def test_m22_two_a7_classes_distinct(m22):
    a = m22.subgroup('A7')
    b = m22.subgroup("A7'")
    ha = frozenset(next(o for o in a.group.orbits() if len(o) == 7))
    hb = frozenset(next(o for o in b.group.orbits() if len(o) == 7))
    # the supports lie in different orbits of 7-sets (each of size 176);
    # conjugate subgroups would have supports in one orbit
    orbit = {ha}
    queue = [ha]
    gens = [g.images for g in m22.group.generators]
    while queue:
        s = queue.pop()
        for g in gens:
            t = frozenset(g[x] for x in s)
            if t not in orbit:
                orbit.add(t)
                queue.append(t)
    assert len(orbit) == 176
    assert hb not in orbit
