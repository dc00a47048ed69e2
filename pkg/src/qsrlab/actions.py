"""Induced actions of a permutation group on derived domains:
k-subsets, uniform partitions, cosets of a subgroup, and block systems.

Every ActionInstance can push an arbitrary source element through its
labelling codec, so class representatives computed in the source group can
be realized as permutations of the derived domain.
"""

from __future__ import annotations

import math
from itertools import combinations

from .perm import Permutation, compose_images, identity_images
from .group import PermGroup

__all__ = [
    'ActionInstance', 'CosetTable', 'natural_action', 'ksubset_action',
    'partition_action', 'coset_action', 'block_systems',
    'induced_block_action', 'iterated_block_systems', 'DomainBudgetError',
]

DEGREE_BUDGET = 10 ** 6


class DomainBudgetError(RuntimeError):
    pass


class ActionInstance:
    """A realized action: domain size, labels, and an element codec.

    `source` is the abstract group whose elements are pushed through
    `act`; for natural actions source and image coincide.
    """

    def __init__(self, name, source, degree, act_fn, gen_images=None,
                 label_fn=None):
        self.name = name
        self.source = source
        self.degree = degree
        self._act = act_fn
        if gen_images is None:
            gen_images = [act_fn(g) for g in source.generators]
        self.gen_images = gen_images
        self._label = label_fn or (lambda i: str(i + 1))
        self._image_group = None
        # populated by coset_action
        self.big_group = None
        self.stabilizer = None

    def act(self, g):
        """Image of a source-group element as a Permutation of the domain."""
        return self._act(g)

    def label(self, i):
        return self._label(i)

    def image_group(self):
        if self._image_group is None:
            self._image_group = PermGroup(self.degree, self.gen_images,
                                          name=f'{self.name} image')
        return self._image_group

    def fixed_point_count(self, g):
        return len(self.act(g).fixed_points())

    def is_faithful(self):
        """Verify kernel triviality by comparing image and source orders."""
        return self.image_group().order() == self.source.order()

    def check_words(self, rng, count=50, max_len=12):
        """Spot-check that random generator words agree as maps.

        Compares the induced permutation of a word evaluated in the source
        with the same word evaluated in the generator images.
        """
        gens = self.source.generators
        if not gens:
            return True
        for _ in range(count):
            length = rng.randint(1, max_len)
            word = [rng.randrange(len(gens)) for _ in range(length)]
            src = identity_images(self.source.degree)
            img = identity_images(self.degree)
            for w in word:
                src = compose_images(src, gens[w].images)
                img = compose_images(img, self.gen_images[w].images)
            pushed = self.act(Permutation(src, _checked=True))
            if pushed.images != img:
                return False
        return True

    def __repr__(self):
        return f'ActionInstance({self.name!r}, degree={self.degree})'


def natural_action(group, name=None):
    return ActionInstance(name or group.name or 'natural', group,
                          group.degree, lambda g: g,
                          gen_images=list(group.generators))


# -- k-subsets ----------------------------------------------------------------

def ksubset_action(group, k):
    """Action on k-subsets of the n points, subsets enumerated in colex order."""
    n = group.degree
    if not 1 <= k < n / 2:
        raise ValueError('need 1 <= k < n/2')
    degree = math.comb(n, k)
    if degree > DEGREE_BUDGET:
        raise DomainBudgetError(f'{degree} subsets exceed the degree budget')
    domain = sorted(combinations(range(n), k), key=lambda s: s[::-1])
    index = {s: i for i, s in enumerate(domain)}

    def act(g):
        images = g.images
        return Permutation(
            [index[tuple(sorted(images[x] for x in s))] for s in domain],
            _checked=True)

    def label(i):
        return '{' + ','.join(str(x + 1) for x in domain[i]) + '}'

    inst = ActionInstance(f'{group.name or "G"} on {k}-subsets',
                          group, degree, act, label_fn=label)
    inst.domain = domain
    return inst


# -- uniform partitions --------------------------------------------------------

def _partitions_into_blocks(points, k):
    if not points:
        yield ()
        return
    first = points[0]
    rest = points[1:]
    for companions in combinations(rest, k - 1):
        block = (first,) + companions
        taken = set(companions)
        remaining = tuple(p for p in rest if p not in taken)
        for tail in _partitions_into_blocks(remaining, k):
            yield (block,) + tail


def partition_count(n, k):
    m = n // k
    return math.factorial(n) // (math.factorial(k) ** m * math.factorial(m))


def partition_action(group, k):
    """Action on partitions of the n points into blocks of size k."""
    n = group.degree
    if n % k != 0 or not 1 < k <= n / 2:
        raise ValueError('need k | n and 1 < k <= n/2')
    degree = partition_count(n, k)
    if degree > DEGREE_BUDGET:
        raise DomainBudgetError(f'{degree} partitions exceed the degree budget')
    domain = list(_partitions_into_blocks(tuple(range(n)), k))
    assert len(domain) == degree
    index = {p: i for i, p in enumerate(domain)}

    def canon(blocks):
        return tuple(sorted(tuple(sorted(b)) for b in blocks))

    def act(g):
        images = g.images
        out = []
        for part in domain:
            out.append(index[canon(tuple(images[x] for x in b) for b in part)])
        return Permutation(out, _checked=True)

    def label(i):
        return '|'.join(','.join(str(x + 1) for x in b) for b in domain[i])

    inst = ActionInstance(f'{group.name or "G"} on {k}-part partitions',
                          group, degree, act, label_fn=label)
    inst.domain = domain
    return inst


# -- coset actions ---------------------------------------------------------------

class CosetTable:
    """Canonical right-coset representatives of H in G.

    A coset Hg is keyed by the unique representative r in Hg minimizing the
    image sequence of H's base lexicographically; the minimum is found
    greedily level by level through H's stabilizer chain, so one
    canonicalization costs one transversal scan and one composition per
    chain level.
    """

    def __init__(self, G, H):
        self.G = G
        self.H = H
        for g in H.generators:
            if not G.contains(g):
                raise ValueError('H is not a subgroup of G: generator outside G')
        index = G.order() // H.order()
        if G.order() % H.order() != 0:
            raise AssertionError('subgroup order does not divide group order')
        if index > DEGREE_BUDGET:
            raise DomainBudgetError(f'coset index {index} exceeds the budget')
        self._levels = [
            (lv.point, list(lv.transversal.items()))
            for lv in H.chain if len(lv.transversal) > 1
        ]
        self.reps = []
        self._key_to_index = {}
        start = self.canonical(identity_images(G.degree))
        self.reps.append(start)
        self._key_to_index[start] = 0
        queue = [0]
        gens = [g.images for g in G.generators]
        while queue:
            i = queue.pop(0)
            rep = self.reps[i]
            for s in gens:
                key = self.canonical(compose_images(rep, s))
                if key not in self._key_to_index:
                    self._key_to_index[key] = len(self.reps)
                    self.reps.append(key)
                    queue.append(len(self.reps))
                    queue[-1] = len(self.reps) - 1
        if len(self.reps) != index:
            raise AssertionError(
                f'coset enumeration found {len(self.reps)} cosets, expected {index}')
        self.index = index

    def canonical(self, images):
        """Canonical representative of the coset H * images."""
        r = images
        for point, transversal in self._levels:
            best_u = None
            best_val = r[point]
            for beta, u in transversal:
                val = r[beta]
                if val < best_val:
                    best_val = val
                    best_u = u
            if best_u is not None:
                r = compose_images(best_u, r)
        return r

    def coset_index(self, images):
        return self._key_to_index[self.canonical(images)]

    def act_images(self, images):
        key_to_index = self._key_to_index
        return tuple(key_to_index[self.canonical(compose_images(rep, images))]
                     for rep in self.reps)


def coset_action(G, H, name=None):
    """Right-multiplication action of G on the cosets of H."""
    table = CosetTable(G, H)

    def act(g):
        return Permutation(table.act_images(g.images), _checked=True)

    def label(i):
        rep = table.reps[i]
        return 'H' if i == 0 else 'H*' + Permutation(rep, _checked=True).cycle_string()

    inst = ActionInstance(
        name or f'{G.name or "G"} on cosets of {H.name or "H"}',
        G, table.index, act, label_fn=label)
    inst.big_group = G
    inst.stabilizer = H
    inst.coset_table = table
    return inst


# -- block systems ------------------------------------------------------------

def _minimal_system_from_pair(gen_images, n, alpha, beta):
    """Atkinson's union-find closure of the seed pair {alpha, beta}."""
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return None
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        return rb

    queue = []
    merged = union(alpha, beta)
    if merged is not None:
        queue.append(merged)
    while queue:
        c = queue.pop()
        rc = find(c)
        for g in gen_images:
            m = union(g[c], g[rc])
            if m is not None:
                queue.append(m)
    blocks = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def block_systems(action):
    """All minimal nontrivial block systems of a transitive action.

    Returns canonical partitions (sorted tuples of sorted point tuples);
    an empty list certifies primitivity.
    """
    group = action.image_group() if isinstance(action, ActionInstance) else action
    n = group.degree
    if not group.is_transitive():
        raise ValueError('block systems require a transitive action')
    gen_images = [g.images for g in group.generators]
    systems = {}
    for beta in range(1, n):
        system = _minimal_system_from_pair(gen_images, n, 0, beta)
        if 1 < len(system) < n:
            systems[system] = True
    return list(systems)


def induced_block_action(action, system):
    """Action induced on the blocks of a G-invariant partition."""
    blocks = tuple(sorted(tuple(sorted(b)) for b in system))
    index = {}
    for i, b in enumerate(blocks):
        for x in b:
            index[x] = i

    def push(images):
        out = [None] * len(blocks)
        for i, b in enumerate(blocks):
            target = index[images[b[0]]]
            for x in b[1:]:
                if index[images[x]] != target:
                    raise ValueError('partition is not invariant under the action')
            out[i] = target
        return out

    source = action.source

    def act(g):
        return Permutation(push(action.act(g).images), _checked=True)

    def label(i):
        return '{' + ','.join(str(x + 1) for x in blocks[i]) + '}'

    inst = ActionInstance(f'{action.name} / {len(blocks)} blocks',
                          source, len(blocks), act,
                          gen_images=[Permutation(push(p.images), _checked=True)
                                      for p in action.gen_images],
                          label_fn=label)
    inst.blocks = blocks
    return inst


def iterated_block_systems(action, _prefix_blocks=None):
    """Every nontrivial block system, found by iterating minimal systems.

    Any system refines through a minimal one, so recursing on induced
    actions enumerates them all.  Intended for small test domains.
    """
    found = {}
    for system in block_systems(action):
        found[tuple(system)] = True
        induced = induced_block_action(action, system)
        for coarser in iterated_block_systems(induced):
            lifted = tuple(sorted(
                tuple(sorted(x for i in blk for x in induced.blocks[i]))
                for blk in coarser))
            if 1 < len(lifted) < action.degree:
                found[lifted] = True
    return list(found)
