"""Group-structural subroutines: conjugacy classes, centralizers,
normalizers of cyclic subgroups, fusion tests, subnormalisers, subnormality
and strongly p-embedded tests.

Three tiers keep everything exact while staying inside memory budgets:
full element scans for small groups, certified random-powering class
search for mid-sized ones (completeness checked against a streamed census
of element orders), and a flagged heuristic search above the census budget
where stopping is governed by a run of unproductive samples.
"""

from __future__ import annotations

import math
from random import Random

import numpy as np

from .perm import Permutation, compose_images, identity_images, invert_images, perm_order
from .group import PermGroup

__all__ = [
    'ClassDatum', 'SubgroupHandle', 'ClassOrbit', 'conjugacy_classes',
    'prime_order_classes', 'centralizer', 'normalizer_of_cyclic',
    'fusion_test', 'subnormaliser', 'is_subnormal', 'is_strongly_p_embedded',
    'BudgetError', 'FULL_SCAN_BUDGET', 'CENSUS_BUDGET',
]

FULL_SCAN_BUDGET = 2 * 10 ** 6     # full element scans / full class lists
CENSUS_BUDGET = 10 ** 7            # streamed order census for certification
HEURISTIC_IDLE_SAMPLES = 10 ** 4   # stop rule above the census budget


class BudgetError(RuntimeError):
    pass


def _dtype_for(degree):
    if degree <= 255:
        return np.uint8
    if degree <= 65535:
        return np.uint16
    return np.uint32


def _pack(images, dtype):
    return np.array(images, dtype=dtype).tobytes()


class ClassOrbit:
    """A conjugacy class as a packed array with optional transporter words.

    Rows are stored in discovery order with parent and generator indices,
    so membership is a binary search and a transporter from the
    representative to any member can be rebuilt by walking parents.
    """

    def __init__(self, group, rep_images):
        self.group = group
        self.rep = tuple(rep_images)
        degree = group.degree
        self.dtype = _dtype_for(degree)
        gens = [g.images for g in group.generators]
        gen_invs = [invert_images(g) for g in gens]
        seen = {_pack(self.rep, self.dtype): 0}
        rows = [self.rep]
        parents = [-1]
        genidx = [-1]
        frontier = 0
        while frontier < len(rows):
            y = rows[frontier]
            for gi, (s, si) in enumerate(zip(gens, gen_invs)):
                z = compose_images(compose_images(si, y), s)
                key = _pack(z, self.dtype)
                if key not in seen:
                    seen[key] = len(rows)
                    rows.append(z)
                    parents.append(frontier)
                    genidx.append(gi)
            frontier += 1
        self.size = len(rows)
        arr = np.frombuffer(
            b''.join(_pack(r, self.dtype) for r in rows), dtype=self.dtype
        ).reshape(self.size, degree)
        self._rows = arr
        self._parent = np.array(parents, dtype=np.int64)
        self._genidx = np.array(genidx, dtype=np.int64)
        void = np.dtype((np.void, arr.shape[1] * arr.dtype.itemsize))
        flat = np.ascontiguousarray(arr).view(void).ravel()
        self._order = np.argsort(flat, kind='stable')
        self._sorted = flat[self._order]
        self._void = void
        self._gens = gens

    def index_of(self, images):
        key = np.frombuffer(_pack(images, self.dtype), dtype=self.dtype)
        probe = np.ascontiguousarray(key).view(self._void).ravel()
        pos = np.searchsorted(self._sorted, probe[0])
        if pos < self.size and self._sorted[pos] == probe[0]:
            return int(self._order[pos])
        return None

    def contains(self, images):
        return self.index_of(images) is not None

    def transporter_to(self, images):
        """Group element g with rep^g = images, or None."""
        idx = self.index_of(images)
        if idx is None:
            return None
        word = []
        while idx > 0:
            word.append(self._genidx[idx])
            idx = self._parent[idx]
        t = identity_images(self.group.degree)
        for gi in reversed(word):
            t = compose_images(t, self._gens[gi])
        return tuple(t)



class ClassDatum:
    """Conjugacy class summary: representative, size, centralizer order."""

    __slots__ = ('rep', 'size', 'centralizer_order', 'element_order',
                 'certified', 'orbit', 'label')

    def __init__(self, rep, size, group_order, element_order,
                 certified=True, orbit=None):
        self.rep = rep
        self.size = size
        if group_order % size != 0:
            raise AssertionError('class size does not divide group order')
        self.centralizer_order = group_order // size
        self.element_order = element_order
        self.certified = certified
        self.orbit = orbit
        self.label = None

    def __repr__(self):
        tag = self.label or f'order {self.element_order}'
        return f'ClassDatum({tag}, size={self.size})'


def _assign_labels(classes):
    classes.sort(key=lambda c: (c.element_order, c.size, c.rep.images))
    by_order = {}
    for c in classes:
        i = by_order.get(c.element_order, 0)
        by_order[c.element_order] = i + 1
        c.label = f'{c.element_order}{chr(ord("a") + i)}'
    return classes


def _class_cache(group):
    cache = getattr(group, '_class_cache', None)
    if cache is None:
        cache = {}
        group._class_cache = cache
    return cache


def order_census(group):
    """Element counts by exact order, from one streamed enumeration."""
    cache = _class_cache(group)
    if 'census' not in cache:
        if group.order() > CENSUS_BUDGET:
            raise BudgetError('order census exceeds the streaming budget')
        counts = {}
        for img in group.element_images():
            o = perm_order(img)
            counts[o] = counts.get(o, 0) + 1
        cache['census'] = counts
    return cache['census']


def conjugacy_classes(group, order_filter=None, rng=None):
    """Conjugacy classes of the group.

    Full mode (|G| within the scan budget) lists every class.  With
    order_filter=p, only classes of elements of order exactly p are
    returned: certified complete against the order census when the census
    is affordable, otherwise found by random powering with the idle-sample
    stop rule and flagged certified=False.
    """
    if order_filter is None:
        return _full_classes(group)
    return _filtered_classes(group, order_filter, rng or Random(0))


def _full_classes(group):
    cache = _class_cache(group)
    if 'full' in cache:
        return cache['full']
    order = group.order()
    if order > FULL_SCAN_BUDGET:
        raise BudgetError(
            f'full class enumeration needs |G| <= {FULL_SCAN_BUDGET}, got {order}')
    dtype = _dtype_for(group.degree)
    pool = {}
    for img in group.element_images():
        pool[_pack(img, dtype)] = img
    gens = [g.images for g in group.generators]
    gen_invs = [invert_images(g) for g in gens]
    classes = []
    while pool:
        _, rep = pool.popitem()
        members = [rep]
        seen = {_pack(rep, dtype)}
        i = 0
        while i < len(members):
            y = members[i]
            for s, si in zip(gens, gen_invs):
                z = compose_images(compose_images(si, y), s)
                key = _pack(z, dtype)
                if key not in seen:
                    seen.add(key)
                    members.append(z)
                    pool.pop(key, None)
            i += 1
        classes.append(ClassDatum(Permutation(rep, _checked=True), len(members),
                                  order, perm_order(rep)))
    total = sum(c.size for c in classes)
    if total != order:
        raise AssertionError('class sizes do not sum to the group order')
    cache['full'] = _assign_labels(classes)
    return cache['full']


def _filtered_classes(group, p, rng):
    cache = _class_cache(group)
    key = ('filtered', p)
    if key in cache:
        return cache[key]
    order = group.order()
    if order % p != 0:
        cache[key] = []
        return cache[key]
    found = []

    def try_element(images):
        o = perm_order(images)
        if o % p != 0:
            return False
        x = images
        e = o // p
        acc = identity_images(group.degree)
        base = x
        while e:
            if e & 1:
                acc = compose_images(acc, base)
            base = compose_images(base, base)
            e >>= 1
        x = acc
        for cls in found:
            if cls.orbit.contains(x):
                return False
        orbit = ClassOrbit(group, x)
        found.append(ClassDatum(Permutation(x, _checked=True), orbit.size,
                                order, p, certified=True, orbit=orbit))
        return True

    if order <= CENSUS_BUDGET:
        target = order_census(group).get(p, 0)
        while sum(c.size for c in found) < target:
            progressed = False
            for _ in range(2000):
                if try_element(group.random_element(rng).images):
                    progressed = True
                    break
            if not progressed:
                # deterministic completion: stream for an unexplained element
                for img in group.element_images():
                    if perm_order(img) == p and \
                            not any(c.orbit.contains(img) for c in found):
                        try_element(img)
                        break
        if sum(c.size for c in found) != target:
            raise AssertionError('class search failed to certify completeness')
    else:
        idle = 0
        while idle < HEURISTIC_IDLE_SAMPLES:
            if try_element(group.random_element(rng).images):
                idle = 0
            else:
                idle += 1
        for c in found:
            c.certified = False
    cache[key] = _assign_labels(found)
    return cache[key]


def _symbolic_sym_alt_classes(group, p):
    """Classes of order-p elements of natural Sym(n)/Alt(n) by cycle type."""
    kind, n = group.natural_kind
    alternating = kind == 'alternating'
    order = group.order()
    classes = []
    for c in range(1, n // p + 1):
        f = n - c * p
        if alternating and (c * (p - 1)) % 2 != 0:
            continue
        sym_size = math.factorial(n) // (p ** c * math.factorial(c) * math.factorial(f))
        cycles = [tuple(range(i * p, (i + 1) * p)) for i in range(c)]
        rep = Permutation.from_cycles(n, cycles)
        splits = alternating and c == 1 and f <= 1 and p % 2 == 1
        if not alternating:
            classes.append(ClassDatum(rep, sym_size, order, p))
        elif splits:
            swap = Permutation.from_cycles(n, [(0, 1)])
            classes.append(ClassDatum(rep, sym_size // 2, order, p))
            classes.append(ClassDatum(rep.conjugated_by(swap), sym_size // 2,
                                      order, p))
        else:
            classes.append(ClassDatum(rep, sym_size, order, p))
    return _assign_labels(classes)


def prime_order_classes(group, p, rng=None):
    """All classes of elements of order exactly p, certified where possible."""
    if getattr(group, 'natural_kind', None):
        cache = _class_cache(group)
        key = ('symbolic', p)
        if key not in cache:
            cache[key] = _symbolic_sym_alt_classes(group, p)
        return cache[key]
    if group.order() <= FULL_SCAN_BUDGET and 'full' in _class_cache(group):
        return [c for c in _full_classes(group) if c.element_order == p]
    return conjugacy_classes(group, order_filter=p, rng=rng)


# -- subgroups ----------------------------------------------------------------

class SubgroupHandle:
    """A subgroup with its own chain, tied to a parent group."""

    def __init__(self, parent, generators, name=None, verify=True):
        self.parent = parent
        if isinstance(generators, PermGroup):
            self.group = generators
        else:
            self.group = PermGroup(parent.degree, generators, name=name)
        if name is not None:
            self.group.name = name
        self.name = self.group.name
        if verify:
            for g in self.group.generators:
                if not parent.contains(g):
                    raise ValueError(
                        f'subgroup {self.name or ""} generator outside parent')
        self._pclasses = {}

    def order(self):
        return self.group.order()

    def index(self):
        q, r = divmod(self.parent.order(), self.group.order())
        if r:
            raise AssertionError('subgroup order does not divide parent order')
        return q

    def contains(self, p):
        return self.group.contains(p)

    def element_order_classes(self, o):
        """H-classes of the elements of exact order o, each with a packed
        membership set and its centralizer order in H."""
        if o in self._pclasses:
            return self._pclasses[o]
        H = self.group
        dtype = _dtype_for(H.degree)
        if H.order() > CENSUS_BUDGET:
            raise BudgetError('stabilizer too large for an element scan')
        remaining = {}
        for img in H.element_images():
            if perm_order(img) == o:
                remaining[_pack(img, dtype)] = img
        gens = [g.images for g in H.generators]
        gen_invs = [invert_images(g) for g in gens]
        out = []
        while remaining:
            _, rep = remaining.popitem()
            members = [rep]
            seen = {_pack(rep, dtype)}
            i = 0
            while i < len(members):
                y = members[i]
                for s, si in zip(gens, gen_invs):
                    z = compose_images(compose_images(si, y), s)
                    zkey = _pack(z, dtype)
                    if zkey not in seen:
                        seen.add(zkey)
                        members.append(z)
                        remaining.pop(zkey, None)
                i += 1
            out.append({
                'rep': Permutation(rep, _checked=True),
                'size': len(members),
                'members': seen,
                'centralizer_order': H.order() // len(members),
                'dtype': dtype,
            })
        out.sort(key=lambda c: (c['size'], c['rep'].images))
        self._pclasses[o] = out
        return out

    def __repr__(self):
        return f'SubgroupHandle({self.name or "H"}, order={self.group.order()})'


# -- centralizers and normalizers ----------------------------------------------

def _collect_subgroup(parent, candidate_stream, target_order=None, name=None):
    """Grow a subgroup from a stream of members, sifting out redundancy."""
    sub = PermGroup(parent.degree, [], name=name)
    sub.build_chain()
    count = 0
    for images in candidate_stream:
        count += 1
        if not sub.contains_images(images):
            gens = [Permutation(g, _checked=True) for g in
                    [images] + [x.images for x in sub.generators]]
            sub = PermGroup(parent.degree, gens, name=name)
            sub.build_chain()
            if target_order is not None and sub.order() == target_order:
                break
    return sub, count


def centralizer(group, x, rng=None):
    """Centralizer of x as a SubgroupHandle.

    Full scan within the scan budget; above it, transporter bookkeeping on
    the class orbit of x yields generators without scanning the group.
    """
    if isinstance(x, Permutation):
        ximg = x.images
    else:
        ximg = tuple(x)
    order = group.order()
    if order <= FULL_SCAN_BUDGET:
        def commuters():
            for img in group.element_images():
                if compose_images(img, ximg) == compose_images(ximg, img):
                    yield img
        sub, count = _collect_subgroup(group, commuters(), name='centralizer')
        if sub.order() != count:
            raise AssertionError('centralizer scan inconsistent')
        return SubgroupHandle(group, sub, verify=False)
    orbit = ClassOrbit(group, ximg)
    target = order // orbit.size
    gens = [g.images for g in group.generators]

    def schreier_stream():
        for i in range(orbit.size):
            y = tuple(int(v) for v in orbit._rows[i])
            t_y = orbit.transporter_to(y)
            for s in gens:
                z = compose_images(compose_images(invert_images(s), y), s)
                t_z = orbit.transporter_to(z)
                # t_y * s * t_z^-1 conjugates x to x
                yield compose_images(compose_images(t_y, s), invert_images(t_z))

    sub = PermGroup(group.degree, [], name='centralizer')
    sub.build_chain()
    for images in schreier_stream():
        if not sub.contains_images(images):
            sub = PermGroup(group.degree,
                            [Permutation(images, _checked=True)] + list(sub.generators),
                            name='centralizer')
            sub.build_chain()
            if sub.order() == target:
                break
    if sub.order() != target:
        raise AssertionError('transporter centralizer failed to reach full order')
    return SubgroupHandle(group, sub, verify=False)


def centralizer_order_in(subgroup, x):
    """|C_H(x)| for x in H, via the H-class orbit size of x."""
    H = subgroup.group if isinstance(subgroup, SubgroupHandle) else subgroup
    orbit = ClassOrbit(H, x.images if isinstance(x, Permutation) else x)
    q, r = divmod(H.order(), orbit.size)
    if r:
        raise AssertionError('orbit size does not divide subgroup order')
    return q


def _power_residues(group_or_orbit, x, m):
    """The exponents k (mod m) with x^k conjugate to x, as a set."""
    if isinstance(group_or_orbit, ClassOrbit):
        orbit = group_or_orbit
    else:
        orbit = ClassOrbit(group_or_orbit, x)
    ximg = orbit.rep
    residues = set()
    power = ximg
    for k in range(1, m):
        if math.gcd(k, m) == 1 and orbit.contains(power):
            residues.add(k)
        power = compose_images(power, ximg)
    return residues, orbit


def normalizer_of_cyclic(group, x, rng=None):
    """N_G(<x>) as a SubgroupHandle; contains the centralizer of x."""
    ximg = x.images if isinstance(x, Permutation) else tuple(x)
    m = perm_order(ximg)
    order = group.order()
    if order <= FULL_SCAN_BUDGET:
        powers = set()
        power = ximg
        for k in range(1, m):
            if math.gcd(k, m) == 1:
                powers.add(power)
            power = compose_images(power, ximg)

        def normalizers():
            for img in group.element_images():
                if compose_images(compose_images(invert_images(img), ximg), img) in powers:
                    yield img
        sub, count = _collect_subgroup(group, normalizers(), name='normalizer')
        if sub.order() != count:
            raise AssertionError('normalizer scan inconsistent')
        return SubgroupHandle(group, sub, verify=False)
    residues, orbit = _power_residues(group, ximg, m)
    cent = centralizer(group, ximg)
    target = cent.order() * len(residues)
    gens = list(cent.group.generators)
    power = ximg
    for k in range(1, m):
        if k in residues:
            t = orbit.transporter_to(power)
            gens.append(Permutation(t, _checked=True))
        power = compose_images(power, ximg)
    sub = PermGroup(group.degree, gens, name='normalizer')
    if sub.order() != target:
        raise AssertionError('transporter normalizer has unexpected order')
    return SubgroupHandle(group, sub, verify=False)


def normalizer_order_of_cyclic(group, x, orbit=None):
    """|N_G(<x>)| without generators: |C_G(x)| * #power residues."""
    ximg = x.images if isinstance(x, Permutation) else tuple(x)
    m = perm_order(ximg)
    if orbit is None:
        orbit = ClassOrbit(group, ximg)
    residues, _ = _power_residues(orbit, ximg, m)
    cent_order = group.order() // orbit.size
    return cent_order * len(residues)


# -- fusion -------------------------------------------------------------------

def fusion_test(group, subgroup, x, class_orbit=None):
    """Does the G-class of x meet H in exactly the H-class of x?

    x must lie in H.  The G-class is intersected with H by testing each
    H-class of elements of order |x| for membership in the G-class.
    """
    H = subgroup if isinstance(subgroup, SubgroupHandle) else \
        SubgroupHandle(group, subgroup)
    ximg = x.images if isinstance(x, Permutation) else tuple(x)
    if not H.contains(Permutation(ximg, _checked=True)):
        raise ValueError('fusion test requires x in H')
    p = perm_order(ximg)
    orbit = class_orbit or ClassOrbit(group, ximg)
    own = None
    for hcls in H.element_order_classes(p):
        rep = hcls['rep'].images
        in_class = orbit.contains(rep)
        is_own = _pack(ximg, hcls['dtype']) in hcls['members']
        if is_own:
            own = hcls
            if not in_class:
                raise AssertionError('class orbit misses an element it contains')
        elif in_class:
            return False
    if own is None:
        raise AssertionError('x not found among H-classes of its order')
    return True


# -- subnormality --------------------------------------------------------------

def _normalizer_in(V, S):
    """N_V(S) for a subgroup S of V, by scanning V's elements."""
    if V.order() > 10 ** 6:
        raise BudgetError('normalizer scan needs |V| <= 10^6')
    sgens = [g.images for g in S.generators]

    def normalizers():
        for img in V.element_images():
            inv = invert_images(img)
            if all(S.contains_images(compose_images(compose_images(inv, s), img))
                   for s in sgens):
                yield img
    sub, count = _collect_subgroup(V, normalizers(), name='normalizer')
    if sub.order() != count:
        raise AssertionError('normalizer scan inconsistent')
    return sub


def is_subnormal(U, V):
    """Is U subnormal in V?  Ascending chain U <= N_V(U) <= ... must reach V."""
    U = U.group if isinstance(U, SubgroupHandle) else U
    V = V.group if isinstance(V, SubgroupHandle) else V
    for g in U.generators:
        if not V.contains(g):
            raise ValueError('U is not contained in V')
    current = U
    while True:
        if current.order() == V.order():
            return True
        bigger = _normalizer_in(V, current)
        if bigger.order() == current.order():
            return False
        current = bigger


def _normal_closure(group_gens, x, degree, limit):
    """<x^U> for U = <group_gens>, by conjugation-closure of generators."""
    gens = [tuple(x)]
    sub = PermGroup(degree, [Permutation(x, _checked=True)])
    sub.build_chain()
    queue = [tuple(x)]
    while queue:
        y = queue.pop()
        for s in group_gens:
            z = compose_images(compose_images(invert_images(s), y), s)
            if not sub.contains_images(z):
                gens.append(z)
                sub = PermGroup(degree, [Permutation(g, _checked=True) for g in gens])
                sub.build_chain()
                queue.append(z)
                if sub.order() > limit:
                    raise BudgetError('normal closure exceeded limit')
    return sub


def _descends_to_cyclic(U, x, p):
    """Does the descending normal-closure series of x inside U reach <x>?"""
    degree = U.degree
    current_gens = [g.images for g in U.generators]
    current_order = U.order()
    while True:
        closure = _normal_closure(current_gens, x, degree, current_order)
        if closure.order() == p:
            return True
        if closure.order() == current_order:
            return False
        current_gens = [g.images for g in closure.generators]
        current_order = closure.order()


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def subnormaliser(group, x, rng=None):
    """Subgroup generated by all g with <x> subnormal in <x, g>.

    x must have prime order p.  When p^2 does not divide |G| every
    overgroup has cyclic Sylow p-subgroups of order p, so <x> is subnormal
    in <x, g> exactly when g normalizes <x> and the subnormaliser equals
    the normalizer.  Otherwise each g is tested by the descending
    normal-closure series of x in <x, g>, with cheap two-element p-group
    probes rejecting most candidates first.
    """
    ximg = x.images if isinstance(x, Permutation) else tuple(x)
    p = perm_order(ximg)
    if not _is_probable_prime(p):
        raise ValueError('subnormaliser is restricted to elements of prime order')
    order = group.order()
    if order % (p * p) != 0:
        # Sylow p-subgroups of every <x, g> are cyclic of order p, so <x>
        # is subnormal in <x, g> exactly when g normalizes it.
        return normalizer_of_cyclic(group, Permutation(ximg, _checked=True), rng=rng)
    if order > 10 ** 6:
        raise BudgetError('subnormaliser scan needs |G| <= 10^6')
    degree = group.degree
    xperm = Permutation(ximg, _checked=True)
    collected = PermGroup(degree, [xperm], name='subnormaliser')
    collected.build_chain()
    for gimg in group.element_images():
        # elements of the running subgroup cannot change the closure,
        # whether or not they would be accepted
        if collected.contains_images(gimg):
            continue
        if group_normalizes(ximg, gimg):
            accept = True
        elif not _subnormal_probe(ximg, gimg, p, degree):
            accept = False
        else:
            U = PermGroup(degree, [xperm, Permutation(gimg, _checked=True)])
            U.build_chain()
            if _strip_p(U.order(), p) * p == U.order():
                # Sylow p of <x, g> is <x> itself; subnormal would force
                # normal, and g does not normalize
                accept = False
            else:
                accept = _descends_to_cyclic(U, ximg, p)
        if accept:
            collected = PermGroup(
                degree, list(collected.generators) + [Permutation(gimg, _checked=True)],
                name='subnormaliser')
            collected.build_chain()
    return SubgroupHandle(group, collected, verify=False)


def _strip_p(n, p):
    while n % p == 0:
        n //= p
    return n


def group_normalizes(ximg, gimg):
    """Does g conjugate x into <x>?"""
    conj = compose_images(compose_images(invert_images(gimg), ximg), gimg)
    p = perm_order(ximg)
    power = ximg
    for _ in range(1, p):
        if conj == power:
            return True
        power = compose_images(power, ximg)
    return False


def _subnormal_probe(ximg, gimg, p, degree, tries=6):
    """Cheap rejection: if some <x, x^u> with u in <x,g> is not a p-group,
    x is not in O_p(<x,g>) and <x> is not subnormal there."""
    u = gimg
    for _ in range(tries):
        y = compose_images(compose_images(invert_images(u), ximg), u)
        prod = compose_images(ximg, y)
        if not _is_p_power(perm_order(prod), p):
            return False
        if p > 2:
            # dihedral shortcut only decides p = 2; probe one more word
            if not _is_p_power(perm_order(compose_images(prod, ximg)), p):
                return False
        u = compose_images(u, compose_images(gimg, ximg))
    return True


def _is_probable_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(math.isqrt(n)) + 1))


# -- strongly p-embedded ---------------------------------------------------------

def is_strongly_p_embedded(group, subgroup, p, coset_reps=None):
    """p divides |H| but no conjugate H^g (g outside H) meets H in order
    divisible by p.

    By Cauchy's theorem p divides |H ^ H^g| exactly when some order-p
    element of H lies in H^g, so only the order-p elements are scanned,
    one g per nontrivial coset.
    """
    H = subgroup if isinstance(subgroup, SubgroupHandle) else \
        SubgroupHandle(group, subgroup)
    if H.order() % p != 0:
        return False
    if coset_reps is None:
        from .actions import CosetTable
        table = CosetTable(group, H.group)
        coset_reps = table.reps
    if len(coset_reps) > 10 ** 4:
        raise BudgetError('strongly p-embedded test needs index <= 10^4')
    p_elements = []
    for cls in H.element_order_classes(p):
        rep = cls['rep'].images
        members = _expand_members(cls)
        p_elements.extend(members)
    identity = identity_images(group.degree)
    for rep in coset_reps:
        if rep == identity:
            continue
        if H.contains(Permutation(rep, _checked=True)):
            continue
        inv = invert_images(rep)
        for u in p_elements:
            if H.group.contains_images(compose_images(compose_images(rep, u), inv)):
                return False
    return True


def _expand_members(hcls):
    dtype = hcls['dtype']
    degree = len(hcls['rep'].images)
    out = []
    for key in hcls['members']:
        out.append(tuple(int(v) for v in np.frombuffer(key, dtype=dtype)))
    return out
