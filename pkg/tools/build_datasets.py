"""Build the bundled Mathieu-group datasets.

Every group and subgroup here is derived inside the degree-11/12/22/23/24
Mathieu representations and verified by order before being written out:
point/pair/triple stabilizers come from stabilizer chains, combinatorial
stabilizers (heptads, octads, 11-sets, dodecads) from orbit + Schreier
generators, the rest from normalizer or centralizer scans and seeded
random subgroup searches.  Output: src/qsrlab/data/*.json.

Run from the repository root:  python tools/build_datasets.py
"""

import json
import sys
import time
from pathlib import Path
from random import Random

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / 'src'))

from qsrlab.perm import Permutation, compose_images, identity_images, invert_images
from qsrlab.group import PermGroup
from qsrlab.structure import centralizer, normalizer_of_cyclic

OUT = ROOT / 'src' / 'qsrlab' / 'data'
RNG = Random(20240811)


def pc(n, *cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


def log(*args):
    print(*args, flush=True)


# ---------------------------------------------------------------- helpers

def reduce_generators(group, rng, tries=400):
    """A small generating set (2 or 3 elements) for an already-built group."""
    order = group.order()
    for count in (2, 3):
        for _ in range(tries):
            gens = [group.random_element(rng) for _ in range(count)]
            cand = PermGroup(group.degree, gens)
            if cand.order() == order:
                return gens
    return list(group.generators)


def random_subgroup_of_order(group, target, rng, predicate=None,
                             seed_order=None, max_tries=30000, gens=2):
    """Random 2-generator search for a subgroup of the given order."""
    for attempt in range(max_tries):
        picks = []
        if seed_order is not None:
            while True:
                g = group.random_element(rng)
                o = g.order()
                if o % seed_order == 0:
                    picks.append(g ** (o // seed_order))
                    break
        while len(picks) < gens:
            picks.append(group.random_element(rng))
        cand = PermGroup(group.degree, picks)
        if cand.order() == target and (predicate is None or predicate(cand)):
            return cand
    raise RuntimeError(f'no subgroup of order {target} found in {max_tries} tries')


def pointwise_stabilizer(group, points):
    """Chain-derived stabilizer of a tuple of points, as a PermGroup."""
    rebased = PermGroup(group.degree, group.generators, base_hint=tuple(points))
    rebased.build_chain()
    gens = []
    for level in rebased.chain[len(points):]:
        gens.extend(Permutation(g, _checked=True) for g in level.gens)
    return PermGroup(group.degree, gens)


def setwise_stabilizer(group, pointset, expected_order=None):
    """Stabilizer of a set of points via its orbit and Schreier generators."""
    start = frozenset(pointset)
    gens = [g.images for g in group.generators]
    transversal = {start: identity_images(group.degree)}
    queue = [start]
    order = group.order()
    stab_gens = []
    sub = PermGroup(group.degree, [])
    sub.build_chain()
    while queue:
        S = queue.pop()
        u = transversal[S]
        for g in gens:
            T = frozenset(g[x] for x in S)
            w = compose_images(u, g)
            if T not in transversal:
                transversal[T] = w
                queue.append(T)
            else:
                schreier = compose_images(w, invert_images(transversal[T]))
                if not sub.contains_images(schreier):
                    stab_gens.append(Permutation(schreier, _checked=True))
                    sub = PermGroup(group.degree, stab_gens)
                    sub.build_chain()
    target = order // len(transversal)
    if sub.order() != target:
        raise RuntimeError(f'set stabilizer has order {sub.order()}, want {target}')
    if expected_order is not None and target != expected_order:
        raise RuntimeError(f'set stabilizer order {target} != expected {expected_order}')
    sub.orbit_size = len(transversal)
    return sub


def normalizer_scan(group, sub, expected=None):
    """N_group(sub) by a full element scan with early exit at the expected order."""
    sgens = [g.images for g in sub.generators]
    collected = []
    result = PermGroup(group.degree, [])
    result.build_chain()
    count = 0
    for img in group.element_images():
        inv = invert_images(img)
        if all(sub.contains_images(compose_images(compose_images(inv, s), img))
               for s in sgens):
            count += 1
            if not result.contains_images(img):
                collected.append(Permutation(img, _checked=True))
                result = PermGroup(group.degree, collected)
                result.build_chain()
    if result.order() != count:
        raise RuntimeError('normalizer scan inconsistent')
    if expected is not None and result.order() != expected:
        raise RuntimeError(f'normalizer order {result.order()} != expected {expected}')
    return result


def element_of_order(group, o, rng, condition=None):
    while True:
        g = group.random_element(rng)
        go = g.order()
        if go % o == 0:
            x = g ** (go // o)
            if x.order() == o and (condition is None or condition(x)):
                return x


def swap_element(group, a, b, rng):
    """A group element exchanging the two points a and b."""
    while True:
        g = group.random_element(rng)
        if g.images[a] == b and g.images[b] == a:
            return g


def to_one_based(perm):
    return [x + 1 for x in perm.images]


def dataset_json(name, group, subs):
    return {
        'name': name,
        'degree': group.degree,
        'order': str(group.order()),
        'generators': [to_one_based(g) for g in group.generators],
        'subgroups': [
            {
                'name': sname,
                'generators': [to_one_based(g) for g in sgens],
                'index': str(group.order() // sorder),
            }
            for sname, sgens, sorder in subs
        ],
    }


def write(name, payload):
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / f'{name}.json'
    with open(path, 'w', encoding='utf-8') as fh:
        json.dump(payload, fh, indent=1)
        fh.write('\n')
    log(f'wrote {path}')


def subgroup_entry(name, group, expected_order, rng):
    if group.order() != expected_order:
        raise RuntimeError(f'{name}: order {group.order()} != {expected_order}')
    gens = reduce_generators(group, rng)
    check = PermGroup(group.degree, gens)
    assert check.order() == expected_order
    return (name, gens, expected_order)


# ---------------------------------------------------------------- base groups

def mathieu11():
    return PermGroup(11, [pc(11, tuple(range(1, 12))),
                          pc(11, (3, 7, 11, 8), (4, 10, 5, 6))], name='M11')


def mathieu12():
    return PermGroup(12, [pc(12, tuple(range(1, 12))),
                          pc(12, (3, 7, 11, 8), (4, 10, 5, 6)),
                          pc(12, (1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10))],
                     name='M12')


def mathieu22():
    return PermGroup(22, [pc(22, tuple(range(1, 12)), tuple(range(12, 23))),
                          pc(22, (1, 4, 5, 9, 3), (2, 8, 10, 7, 6),
                             (12, 15, 16, 20, 14), (13, 19, 21, 18, 17)),
                          pc(22, (1, 21), (2, 10, 8, 6), (3, 13, 4, 17),
                             (5, 19, 9, 18), (11, 22), (12, 14, 16, 20))],
                     name='M22')


def mathieu23():
    return PermGroup(23, [pc(23, tuple(range(1, 24))),
                          pc(23, (3, 17, 10, 7, 9), (4, 13, 14, 19, 5),
                             (8, 18, 11, 12, 23), (15, 20, 22, 21, 16))],
                     name='M23')


def mathieu24():
    return PermGroup(24, [pc(24, tuple(range(1, 24))),
                          pc(24, (3, 17, 10, 7, 9), (4, 13, 14, 19, 5),
                             (8, 18, 11, 12, 23), (15, 20, 22, 21, 16)),
                          pc(24, (1, 24), (2, 23), (3, 12), (4, 16), (5, 18),
                             (6, 10), (7, 20), (8, 14), (9, 21), (11, 17),
                             (13, 22), (15, 19))],
                     name='M24')


# ---------------------------------------------------------------- M11

def build_m11():
    log('== M11')
    m11 = mathieu11()
    assert m11.order() == 7920
    subs = []

    m10 = pointwise_stabilizer(m11, (0,))
    subs.append(subgroup_entry('A6.2_3', m10, 720, RNG))

    l211 = random_subgroup_of_order(m11, 660, RNG)
    subs.append(subgroup_entry('L2(11)', l211, 660, RNG))

    # N(Sylow 3): a 3^2 subgroup and its normalizer
    x3 = element_of_order(m11, 3, RNG)
    cent = centralizer(m11, x3)
    y3 = None
    for g in cent.group.elements():
        if g.order() == 3 and g != x3 and g != x3 ** 2:
            cand = PermGroup(11, [x3, g])
            if cand.order() == 9:
                y3 = g
                break
    P9 = PermGroup(11, [x3, y3])
    assert P9.order() == 9
    n9 = normalizer_scan(m11, P9, expected=144)
    subs.append(subgroup_entry('3^2:Q8.2', n9, 144, RNG))

    s5 = random_subgroup_of_order(m11, 120, RNG)
    subs.append(subgroup_entry('A5.2', s5, 120, RNG))

    z = element_of_order(m11, 2, RNG)
    c48 = centralizer(m11, z).group
    subs.append(subgroup_entry('2.S4', c48, 48, RNG))

    write('m11', dataset_json('M11', m11, subs))


# ---------------------------------------------------------------- M12

def build_m12():
    log('== M12')
    m12 = mathieu12()
    assert m12.order() == 95040
    subs = []

    m11a = pointwise_stabilizer(m12, (11,))
    assert all(g.images[11] == 11 for g in m11a.generators)
    subs.append(subgroup_entry('M11', m11a, 7920, RNG))

    m11b = random_subgroup_of_order(
        m12, 7920, RNG, predicate=lambda u: u.is_transitive())
    subs.append(subgroup_entry("M11'", m11b, 7920, RNG))

    pair_pw = pointwise_stabilizer(m12, (0, 1))
    swap = swap_element(m12, 0, 1, RNG)
    a6a = PermGroup(12, list(pair_pw.generators) + [swap])
    orbits_a = sorted(len(o) for o in a6a.orbits())
    assert a6a.order() == 1440 and orbits_a == [2, 10], (a6a.order(), orbits_a)
    subs.append(subgroup_entry('A6.2^2', a6a, 1440, RNG))

    a6b = random_subgroup_of_order(
        m12, 1440, RNG, predicate=lambda u: u.is_transitive())
    subs.append(subgroup_entry("A6.2^2'", a6b, 1440, RNG))

    l2 = random_subgroup_of_order(
        m12, 660, RNG, predicate=lambda u: u.is_transitive())
    subs.append(subgroup_entry('L2(11)', l2, 660, RNG))

    # centralizers of the two involution classes: 2 x S5 (fixed point free
    # class) and 2^(1+4):S3
    z6 = element_of_order(m12, 2, RNG,
                          condition=lambda x: len(x.fixed_points()) == 0)
    c240 = centralizer(m12, z6).group
    subs.append(subgroup_entry('2xS5', c240, 240, RNG))

    z4 = element_of_order(m12, 2, RNG,
                          condition=lambda x: len(x.fixed_points()) == 4)
    c192 = centralizer(m12, z4).group
    zc = [g for g in c192.elements() if all(
        (h * g).images == (g * h).images for h in c192.generators)]
    log('   C(2b) order', c192.order(), 'center size', len(zc))
    assert c192.order() == 192 and len(zc) == 2
    subs.append(subgroup_entry('2^(1+4):S3', c192, 192, RNG))

    write('m12', dataset_json('M12', m12, subs))


# ---------------------------------------------------------------- M22 / M22.2

def no_outer_involution(u):
    """True for A6.2_3 = M10: no involutions outside the derived subgroup."""
    derived = derived_subgroup(u)
    if derived.order() != 360:
        return False
    return not any(g.order() == 2 and not derived.contains(g)
                   for g in u.elements())


def derived_subgroup(u):
    gens = []
    sub = PermGroup(u.degree, [])
    sub.build_chain()
    for a in u.generators:
        for b in u.generators:
            c = a.inverse() * b.inverse() * a * b
            if not sub.contains(c):
                gens.append(c)
                sub = PermGroup(u.degree, gens)
                sub.build_chain()
    # normal closure of the commutators
    queue = list(gens)
    while queue:
        c = queue.pop()
        for g in u.generators:
            d = c.conjugated_by(g)
            if not sub.contains(d):
                gens.append(d)
                sub = PermGroup(u.degree, gens)
                sub.build_chain()
                queue.append(d)
    return sub


def find_e8_with_normalizer(m22, expected, rng):
    z = element_of_order(m22, 2, rng)
    cz = centralizer(m22, z).group
    invol = [g for g in cz.elements() if g.order() == 2]
    tried = set()
    for y in invol:
        for w in invol:
            E = PermGroup(22, [z, y, w])
            if E.order() != 8:
                continue
            if any(g.order() > 2 for g in E.elements()):
                continue
            key = frozenset(g.images for g in E.elements())
            if key in tried:
                continue
            tried.add(key)
            n = normalizer_scan(m22, E)
            log('   E8 normalizer order', n.order())
            if n.order() == expected:
                return E, n
    raise RuntimeError('no E8 with the requested normalizer found')


def build_m22_family():
    log('== M22 and M22.2')
    m22 = mathieu22()
    assert m22.order() == 443520
    m24 = mathieu24()
    assert m24.order() == 244823040

    # M22.2 as the stabilizer of the duad {23, 24} in M24, restricted to
    # the other 22 points.
    pw = pointwise_stabilizer(m24, (22, 23))
    assert pw.order() == 443520
    sw = swap_element(m24, 22, 23, RNG)
    big = PermGroup(24, list(pw.generators) + [sw])
    assert big.order() == 887040
    m22x = PermGroup(22, [Permutation(g.images[:22], _checked=True)
                          for g in big.generators], name='M22.2')
    assert m22x.order() == 887040
    m22n = PermGroup(22, [Permutation(g.images[:22], _checked=True)
                          for g in pw.generators], name='M22-in-M22.2')
    assert m22n.order() == 443520

    # ---- M22 subgroups (in the native M22 labelling)
    subs = []
    l34 = pointwise_stabilizer(m22, (0,))
    subs.append(subgroup_entry('L3(4)', l34, 20160, RNG))

    a7a = random_subgroup_of_order(m22, 2520, RNG)
    # certify the second class: conjugate by an outer element of the
    # M24-derived copy after matching the two labellings via an isomorphism
    # is overkill; instead find A7s until two are non-conjugate, certified
    # by a normalizer scan in M22.2 below using the M24 labelling.
    subs.append(subgroup_entry('A7', a7a, 2520, RNG))
    a7b = find_second_a7(m22, a7a, RNG)
    subs.append(subgroup_entry("A7'", a7b, 2520, RNG))

    duad_pw = pointwise_stabilizer(m22, (0, 1))
    duad = PermGroup(22, list(duad_pw.generators) + [swap_element(m22, 0, 1, RNG)])
    subs.append(subgroup_entry('2^4:S5', duad, 1920, RNG))

    E8, n1344 = find_e8_with_normalizer(m22, 1344, RNG)
    subs.append(subgroup_entry('2^3:L3(2)', n1344, 1344, RNG))

    m10 = random_subgroup_of_order(m22, 720, RNG, seed_order=8,
                                   predicate=no_outer_involution)
    subs.append(subgroup_entry('A6.2_3', m10, 720, RNG))

    l211 = random_subgroup_of_order(m22, 660, RNG)
    subs.append(subgroup_entry('L2(11)', l211, 660, RNG))

    write('m22', dataset_json('M22', m22, subs))

    # ---- M22.2 subgroups (in the M24-derived labelling)
    subs = []
    ptstab = pointwise_stabilizer(m22x, (0,))
    subs.append(subgroup_entry('L3(4).2_2', ptstab, 40320, RNG))

    duad_pw = pointwise_stabilizer(m22x, (0, 1))
    duad = PermGroup(22, list(duad_pw.generators) + [swap_element(m22x, 0, 1, RNG)])
    subs.append(subgroup_entry('2^5.S5', duad, 3840, RNG))

    E8x, n1344x = find_e8_with_normalizer(m22n, 1344, RNG)
    n2688 = normalizer_scan(m22x, E8x, expected=2688)
    subs.append(subgroup_entry('2x2^3:L3(2)', n2688, 2688, RNG))

    m10x = random_subgroup_of_order(m22n, 720, RNG, seed_order=8,
                                    predicate=no_outer_involution)
    n1440 = normalizer_scan(m22x, m10x, expected=1440)
    subs.append(subgroup_entry('A6.2^2', n1440, 1440, RNG))

    l2x = random_subgroup_of_order(m22n, 660, RNG)
    n1320 = normalizer_scan(m22x, l2x, expected=1320)
    subs.append(subgroup_entry('L2(11).2', n1320, 1320, RNG))

    write('m22_2', dataset_json('M22.2', m22x, subs))


def find_second_a7(m22, first, rng):
    """An A7 not conjugate to `first`, certified by fixing different
    7-point orbits that no element of M22 can align... conjugacy of the two
    M22-classes is decided by a transporter search over the orbit of the
    7-point A7-orbit set."""
    first_heptad = frozenset(next(o for o in first.orbits() if len(o) == 7))
    # orbit of the heptad under M22 with membership only
    orbit = {first_heptad}
    queue = [first_heptad]
    gens = [g.images for g in m22.generators]
    while queue:
        S = queue.pop()
        for g in gens:
            T = frozenset(g[x] for x in S)
            if T not in orbit:
                orbit.add(T)
                queue.append(T)
    log('   A7 heptad orbit size', len(orbit))
    while True:
        cand = random_subgroup_of_order(m22, 2520, rng)
        heptad = frozenset(next(o for o in cand.orbits() if len(o) == 7))
        if heptad not in orbit:
            return cand
        # same orbit of supports: could still be nonconjugate, but cheap to
        # keep sampling until the support certificate separates

# ---------------------------------------------------------------- M23

def block_through(group, points, block_size):
    """Steiner block through the given points: the points plus the small
    orbit of their pointwise stabilizer."""
    stab = pointwise_stabilizer(group, points)
    orbits = [o for o in stab.orbits() if len(o) > 1 or o[0] not in points]
    rest = [o for o in orbits if len(o) == block_size - len(points)]
    if len(rest) != 1:
        raise RuntimeError(f'block completion ambiguous: {sorted(map(len, orbits))}')
    return frozenset(points) | frozenset(rest[0])


def heptad_orbit(m23, heptad):
    orbit = {heptad}
    queue = [heptad]
    gens = [g.images for g in m23.generators]
    while queue:
        S = queue.pop()
        for g in gens:
            T = frozenset(g[x] for x in S)
            if T not in orbit:
                orbit.add(T)
                queue.append(T)
    return orbit


def build_m23():
    log('== M23')
    m23 = mathieu23()
    assert m23.order() == 10200960
    subs = []

    m22 = pointwise_stabilizer(m23, (22,))
    subs.append(subgroup_entry('M22', m22, 443520, RNG))

    duad_pw = pointwise_stabilizer(m23, (0, 1))
    duad = PermGroup(23, list(duad_pw.generators) + [swap_element(m23, 0, 1, RNG)])
    subs.append(subgroup_entry('L3(4).2_2', duad, 40320, RNG))

    heptad = block_through(m23, (0, 1, 2, 3), 7)
    log('   heptad:', sorted(x + 1 for x in heptad))
    hstab = setwise_stabilizer(m23, heptad, expected_order=40320)
    assert hstab.orbit_size == 253
    subs.append(subgroup_entry('2^4:A7', hstab, 40320, RNG))

    orbit = heptad_orbit(m23, heptad)
    assert len(orbit) == 253
    octad = None
    eleven = None
    for other in orbit:
        meet = len(heptad & other)
        if meet == 3 and octad is None:
            octad = heptad ^ other
        if meet == 1 and eleven is None:
            eleven = frozenset(range(23)) - (heptad ^ other)
        if octad is not None and eleven is not None:
            break
    assert octad is not None and len(octad) == 8
    assert eleven is not None and len(eleven) == 11
    ostab = setwise_stabilizer(m23, octad, expected_order=20160)
    assert ostab.orbit_size == 506
    subs.append(subgroup_entry('A8', ostab, 20160, RNG))

    estab = setwise_stabilizer(m23, eleven, expected_order=7920)
    assert estab.orbit_size == 1288
    subs.append(subgroup_entry('M11', estab, 7920, RNG))

    triad = setwise_stabilizer(m23, {0, 1, 2}, expected_order=5760)
    assert triad.orbit_size == 1771
    subs.append(subgroup_entry('2^4:(3xA5).2', triad, 5760, RNG))

    x23 = m23.generators[0]
    assert x23.order() == 23
    t0 = time.time()
    n253 = normalizer_of_cyclic(m23, x23).group
    log('   N(<23-cycle>) order', n253.order(), 'in', round(time.time() - t0, 1), 's')
    assert n253.order() == 253
    subs.append(subgroup_entry('23:11', n253, 253, RNG))

    write('m23', dataset_json('M23', m23, subs))


# ---------------------------------------------------------------- M12.2

def build_m12_2():
    log('== M12.2')
    m24 = mathieu24()
    octad = block_through(m24, (0, 1, 2, 3, 4), 8)
    log('   octad:', sorted(x + 1 for x in octad))
    dodecad = None
    while dodecad is None:
        g = m24.random_element(RNG)
        other = frozenset(g.images[x] for x in octad)
        if len(octad & other) == 2:
            dodecad = octad ^ other
    log('   dodecad:', sorted(x + 1 for x in dodecad))
    m12 = setwise_stabilizer(m24, dodecad, expected_order=95040)
    assert m12.orbit_size == 2576

    # stabilizer of the unordered pair {D, complement}
    comp = frozenset(range(24)) - dodecad
    pair0 = frozenset({dodecad, comp})
    gens = [g.images for g in m24.generators]
    transversal = {pair0: identity_images(24)}
    queue = [pair0]
    stab_gens = []
    sub = PermGroup(24, [])
    sub.build_chain()
    while queue:
        S = queue.pop()
        u = transversal[S]
        for g in gens:
            T = frozenset(frozenset(g[x] for x in part) for part in S)
            w = compose_images(u, g)
            if T not in transversal:
                transversal[T] = w
                queue.append(T)
            else:
                schreier = compose_images(w, invert_images(transversal[T]))
                if not sub.contains_images(schreier):
                    stab_gens.append(Permutation(schreier, _checked=True))
                    sub = PermGroup(24, stab_gens)
                    sub.build_chain()
    assert len(transversal) == 1288, len(transversal)
    m12x = sub
    assert m12x.order() == 190080
    m12x.name = 'M12.2'

    subs = []
    l2_max = random_subgroup_of_order(
        m12, 660, RNG, predicate=lambda u: all(len(o) > 1 for o in u.orbits()))
    n_a = normalizer_scan(m12x, l2_max, expected=1320)
    subs.append(subgroup_entry('L2(11).2', n_a, 1320, RNG))

    l2_point = random_subgroup_of_order(
        m12, 660, RNG, predicate=lambda u: any(len(o) == 1 for o in u.orbits()))
    n_b = normalizer_scan(m12x, l2_point, expected=1320)
    subs.append(subgroup_entry("L2(11).2'", n_b, 1320, RNG))

    z = element_of_order(m12, 2, RNG,
                         condition=lambda x: len(x.fixed_points()) == 0)
    c = centralizer(m12, z).group
    if c.order() != 240:
        raise RuntimeError(f'fixed-point-free involution centralizer {c.order()}')
    n480 = normalizer_scan(m12x, c, expected=480)
    subs.append(subgroup_entry('(2^2xA5):2', n480, 480, RNG))

    write('m12_2', dataset_json('M12.2', m12x, subs))


def main():
    t0 = time.time()
    build_m11()
    build_m12()
    build_m22_family()
    build_m23()
    build_m12_2()
    log('total', round(time.time() - t0, 1), 's')


if __name__ == '__main__':
    main()
