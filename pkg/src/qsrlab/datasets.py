"""Strict loader for generator datasets.

A dataset is a JSON object {"name", "degree", "order", "generators",
"subgroups"} with 1-based generator image lists, the group order as a
decimal string, and each subgroup carrying its own generators plus its
declared index (decimal string).  Loading verifies everything it can:
images are bijections, the constructed group order equals the declared
order, subgroup generators are members, and computed indices match the
declared ones.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .perm import Permutation
from .group import PermGroup
from .structure import SubgroupHandle

__all__ = ['GeneratorDataset', 'DatasetError', 'load_dataset',
           'builtin_dataset_names', 'load_builtin_dataset', 'builtin_data_dir']

_GROUP_KEYS = {'name', 'degree', 'order', 'generators', 'subgroups'}
_SUBGROUP_KEYS = {'name', 'generators', 'index'}


class DatasetError(ValueError):
    pass


class GeneratorDataset:
    """A verified group-with-subgroups bundle."""

    def __init__(self, name, group, subgroups):
        self.name = name
        self.group = group
        self.subgroups = subgroups

    def subgroup(self, name):
        for handle in self.subgroups:
            if handle.name == name:
                return handle
        raise KeyError(f'dataset {self.name} has no subgroup named {name!r}')

    def __repr__(self):
        return (f'GeneratorDataset({self.name}, order={self.group.order()}, '
                f'{len(self.subgroups)} subgroups)')


def _parse_generators(raw, degree, where):
    gens = []
    for images in raw:
        if not isinstance(images, list) or len(images) != degree:
            raise DatasetError(f'{where}: generator image list of wrong length')
        if sorted(images) != list(range(1, degree + 1)):
            raise DatasetError(f'{where}: generator images are not a bijection '
                               f'of 1..{degree}')
        gens.append(Permutation([x - 1 for x in images], _checked=True))
    return gens


def parse_dataset(obj):
    if not isinstance(obj, dict):
        raise DatasetError('dataset root must be a JSON object')
    unknown = set(obj) - _GROUP_KEYS
    if unknown:
        raise DatasetError(f'unknown dataset keys: {sorted(unknown)}')
    missing = _GROUP_KEYS - set(obj)
    if missing:
        raise DatasetError(f'missing dataset keys: {sorted(missing)}')
    name = obj['name']
    degree = obj['degree']
    if not isinstance(degree, int) or degree < 1:
        raise DatasetError('degree must be a positive integer')
    declared_order = int(obj['order'])
    gens = _parse_generators(obj['generators'], degree, name)
    group = PermGroup(degree, gens, name=name)
    if group.order() != declared_order:
        raise DatasetError(
            f'{name}: constructed order {group.order()} != declared {declared_order}')
    subgroups = []
    for sub in obj['subgroups']:
        unknown = set(sub) - _SUBGROUP_KEYS
        if unknown:
            raise DatasetError(f'{name}: unknown subgroup keys {sorted(unknown)}')
        missing = _SUBGROUP_KEYS - set(sub)
        if missing:
            raise DatasetError(f'{name}: subgroup missing keys {sorted(missing)}')
        sname = sub['name']
        sgens = _parse_generators(sub['generators'], degree, f'{name}/{sname}')
        try:
            handle = SubgroupHandle(group, sgens, name=sname)
        except ValueError as exc:
            raise DatasetError(f'{name}/{sname}: {exc}') from exc
        declared_index = int(sub['index'])
        if handle.index() != declared_index:
            raise DatasetError(
                f'{name}/{sname}: computed index {handle.index()} != '
                f'declared {declared_index}')
        subgroups.append(handle)
    return GeneratorDataset(name, group, subgroups)


def load_dataset(path):
    with open(path, 'r', encoding='utf-8') as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DatasetError(f'{path}: not valid JSON: {exc}') from exc
    return parse_dataset(obj)


def builtin_data_dir():
    return Path(resources.files('qsrlab') / 'data')


def builtin_dataset_names(data_dir=None):
    root = Path(data_dir) if data_dir else builtin_data_dir()
    return sorted(p.stem for p in root.glob('*.json'))


def load_builtin_dataset(name, data_dir=None):
    root = Path(data_dir) if data_dir else builtin_data_dir()
    path = root / f'{name}.json'
    if not path.exists():
        raise DatasetError(f'no dataset named {name!r} in {root}')
    return load_dataset(path)
