"""Constructors for the group families under study: symmetric and
alternating groups, wreath products in product action, small diagonal
models built from coset tuples, holomorph-style doubled actions, and a
handful of named affine and linear groups.
"""

from __future__ import annotations

import math

from .perm import Permutation, compose_images, identity_images, invert_images
from .group import PermGroup
from .actions import DomainBudgetError, natural_action
from .fields import GF, affine_perm_action

__all__ = [
    'make_sym_alt', 'make_product_action', 'sd_fixed_coset_count',
    'make_sd_small', 'make_hs_type', 'EnumeratedGroup',
    'gl32_fano_group', 'agl32_group', 'alt4_matrix_action',
    's0_affine_action', 'sl25_affine_action', 'agammal1_action',
    'SIMPLE_ORDERS_BELOW_1E6',
]

# Orders of the nonabelian finite simple groups below 10^6 (classification).
SIMPLE_ORDERS_BELOW_1E6 = frozenset([
    60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616, 6048, 6072,
    7800, 7920, 9828, 12180, 14880, 20160, 25308, 25920, 29120, 32736, 34440,
    39732, 51888, 58800, 62400, 74412, 95040, 102660, 113460, 126000, 150348,
    175560, 178920, 181440, 194472, 246480, 262080, 265680, 285852, 352440,
    372000, 443520, 456288, 515100, 546312, 604800, 612468, 647460, 721392,
    885720, 976500,
])


def make_sym_alt(n, alternating=False):
    """Sym(n) or Alt(n) in the natural action, tagged for symbolic classes."""
    if not 1 <= n <= 24:
        raise ValueError('natural symmetric/alternating degree must be 1..24')
    name = f'{"Alt" if alternating else "Sym"}({n})'
    if n <= 2:
        gens = [] if (alternating or n == 1) else [Permutation((1, 0))]
        g = PermGroup(max(n, 1), gens, name=name)
    elif alternating:
        cycle = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [cycle])]
        g = PermGroup(n, gens, name=name)
    else:
        gens = [Permutation.from_cycles(n, [(0, 1)]),
                Permutation.from_cycles(n, [tuple(range(n))])]
        g = PermGroup(n, gens, name=name)
    g.natural_kind = ('alternating' if alternating else 'symmetric', n)
    return g


# -- product action -----------------------------------------------------------

class ProductAction:
    """Sym(k) wr Sym(l) acting on l-tuples over a k-point alphabet.

    Tuples (a_1, ..., a_l) are encoded as integers sum(a_i * k^(i-1)),
    first coordinate least significant.
    """

    def __init__(self, k, ell):
        if k < 3 or ell < 2:
            raise ValueError('need k >= 3 and l >= 2')
        n = k ** ell
        if n > 20000:
            raise DomainBudgetError(f'{k}^{ell} points exceed the budget')
        self.k = k
        self.ell = ell
        self.degree = n

        def decode(idx):
            out = []
            for _ in range(ell):
                out.append(idx % k)
                idx //= k
            return tuple(out)

        def encode(t):
            idx = 0
            for a in reversed(t):
                idx = idx * k + a
            return idx

        self.decode = decode
        self.encode = encode
        points = [decode(i) for i in range(n)]
        base_gens = []
        sym_gens = [Permutation.from_cycles(k, [(0, 1)]),
                    Permutation.from_cycles(k, [tuple(range(k))])]
        for coord in range(ell):
            for s in sym_gens:
                base_gens.append(Permutation(
                    [encode(t[:coord] + (s.images[t[coord]],) + t[coord + 1:])
                     for t in points], _checked=True))
        top_gens = []
        for sigma in ([(0, 1)], [tuple(range(ell))]):
            sig = Permutation.from_cycles(ell, sigma)
            inv = sig.inverse().images
            top_gens.append(Permutation(
                [encode(tuple(t[inv[i]] for i in range(ell))) for t in points],
                _checked=True))
        self.base_group = PermGroup(n, base_gens, name=f'Sym({k})^{ell}')
        self.group = PermGroup(n, base_gens + top_gens,
                               name=f'Sym({k}) wr Sym({ell}) on {k}^{ell}')
        expected = math.factorial(k) ** ell * math.factorial(ell)
        if self.group.order() != expected:
            raise AssertionError('wreath product has unexpected order')

    def in_base(self, p):
        return self.base_group.contains(p)

    def component(self, p, coord):
        """Coordinate-i component of a base-group element, as a Permutation
        of the k alphabet points."""
        zero = (0,) * self.ell
        images = []
        for a in range(self.k):
            t = zero[:coord] + (a,) + zero[coord + 1:]
            images.append(self.decode(p.images[self.encode(t)])[coord])
        return Permutation(images)

    def embed_pair(self, components, sigma):
        """Element h*sigma from Sym(k) components and a top permutation."""
        inv = sigma.inverse().images
        points = [self.decode(i) for i in range(self.degree)]
        images = []
        for t in points:
            moved = tuple(components[i].images[t[i]] for i in range(self.ell))
            images.append(self.encode(tuple(moved[inv[i]] for i in range(self.ell))))
        return Permutation(images)

    def action(self):
        return natural_action(self.group, name=self.group.name)


def make_product_action(k, ell):
    """The wreath product in product action plus its base-group predicate."""
    pa = ProductAction(k, ell)
    return pa.group, pa.in_base, pa


# -- enumerated groups (element-indexed multiplication) -------------------------

class EnumeratedGroup:
    """A small group materialized as an indexed element list.

    Supports the coset-tuple and doubled-action constructions, which need
    multiplication on element indices.
    """

    def __init__(self, group, limit=10 ** 5):
        self.group = group
        self.elements = sorted(group.element_images(limit=limit))
        self.index = {img: i for i, img in enumerate(self.elements)}
        self.identity = self.index[identity_images(group.degree)]
        self.order = len(self.elements)

    def mul(self, i, j):
        return self.index[compose_images(self.elements[i], self.elements[j])]

    def inv(self, i):
        return self.index[invert_images(self.elements[i])]

    def power(self, i, e):
        out = self.identity
        base = i
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def automorphism_from_conjugation(self, p):
        """Index map of x -> p^-1 x p for a permutation p normalizing the group."""
        pin = invert_images(p.images)
        table = []
        for img in self.elements:
            conj = compose_images(compose_images(pin, img), p.images)
            table.append(self.index[conj])
        return table


def sd_fixed_coset_count(T, k):
    """Number of solutions of s^k = 1 in the simple group T.

    This equals the number of coset tuples fixed by the cycle that rotates
    k diagonal coordinates, so the rotation is quasi-semiregular on the
    coset domain exactly when the count is 1.
    """
    if T.order() not in SIMPLE_ORDERS_BELOW_1E6:
        raise ValueError('T must be a nonabelian simple group of order <= 10^6')
    if not _is_prime(k):
        raise ValueError('k must be prime')
    count = 0
    identity = identity_images(T.degree)
    for img in T.element_images(limit=10 ** 6):
        x = img
        e = k
        acc = identity
        while e:
            if e & 1:
                acc = compose_images(acc, x)
            x = compose_images(x, x)
            e >>= 1
        if acc == identity:
            count += 1
    return count


def _is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(math.isqrt(n)) + 1))


def make_sd_small(T, k, automorphisms=()):
    """Diagonal-quotient action: T^k on tuples of diagonal-coset keys.

    Points are the |T|^(k-1) tuples (t1^-1 t2, ..., t1^-1 tk); generators
    realize the k coordinate factors, the full top Sym(k), and any supplied
    automorphisms of T (as element-index maps).
    """
    E = EnumeratedGroup(T)
    ell = k - 1
    degree = E.order ** ell
    if degree > 10 ** 6:
        raise DomainBudgetError(f'|T|^{k - 1} = {degree} exceeds the budget')

    def decode(idx):
        out = []
        for _ in range(ell):
            out.append(idx % E.order)
            idx //= E.order
        return tuple(out)

    def encode(t):
        idx = 0
        for a in reversed(t):
            idx = idx * E.order + a
        return idx

    points = [decode(i) for i in range(degree)]
    gens = []
    roles = []
    gen_perms = [E.index[g.images] for g in T.generators]

    def keys_to_tuple(keys):
        return (E.identity,) + keys

    for s in gen_perms:
        s_inv = E.inv(s)
        # right multiplication in coordinate 1 changes every key
        gens.append(Permutation(
            [encode(tuple(E.mul(s_inv, x) for x in t)) for t in points],
            _checked=True))
        roles.append('factor-1')
        for coord in range(ell):
            gens.append(Permutation(
                [encode(t[:coord] + (E.mul(t[coord], s),) + t[coord + 1:])
                 for t in points], _checked=True))
            roles.append(f'factor-{coord + 2}')

    def top_perm(sigma):
        inv = sigma.inverse().images
        images = []
        for t in points:
            full = keys_to_tuple(t)
            u = tuple(full[inv[i]] for i in range(k))
            u1_inv = E.inv(u[0])
            images.append(encode(tuple(E.mul(u1_inv, x) for x in u[1:])))
        return Permutation(images, _checked=True)

    top_cycle = Permutation.from_cycles(k, [tuple(range(k))])
    gens.append(top_perm(top_cycle))
    roles.append('top-cycle')
    if k > 2:
        gens.append(top_perm(Permutation.from_cycles(k, [(0, 1)])))
        roles.append('top-swap')
    for auto in automorphisms:
        gens.append(Permutation(
            [encode(tuple(auto[x] for x in t)) for t in points], _checked=True))
        roles.append('automorphism')

    group = PermGroup(degree, gens, name=f'diag({T.name or "T"}^{k})')
    inst = natural_action(group, name=group.name)
    inst.top_cycle_image = gens[roles.index('top-cycle')]
    inst.enumerated = E
    return inst


def make_hs_type(T, include_swap=True, include_outer=False, outer_perm=None):
    """Left-right translation action of T x T on T, with optional inversion
    (coordinate swap) and outer automorphism generators."""
    E = EnumeratedGroup(T)
    if E.order > 10 ** 5:
        raise DomainBudgetError('|T| exceeds the doubled-action budget')
    gens = []
    gen_perms = [E.index[g.images] for g in T.generators]
    for s in gen_perms:
        s_inv = E.inv(s)
        gens.append(Permutation([E.mul(s_inv, x) for x in range(E.order)],
                                _checked=True))
        gens.append(Permutation([E.mul(x, s) for x in range(E.order)],
                                _checked=True))
    if include_swap:
        gens.append(Permutation([E.inv(x) for x in range(E.order)],
                                _checked=True))
    if include_outer:
        if outer_perm is None:
            raise ValueError('include_outer requires an outer automorphism')
        table = (outer_perm if isinstance(outer_perm, list)
                 else E.automorphism_from_conjugation(outer_perm))
        gens.append(Permutation(table, _checked=True))
    flags = []
    if include_swap:
        flags.append('swap')
    if include_outer:
        flags.append('outer')
    suffix = '+'.join(flags) if flags else 'plain'
    group = PermGroup(E.order, gens,
                      name=f'holomorph-type({T.name or "T"}, {suffix})')
    inst = natural_action(group, name=group.name)
    inst.enumerated = E
    return inst


# -- named linear/affine constructions ------------------------------------------

def gl32_fano_group():
    """GL(3,2) permuting the 7 nonzero vectors of GF(2)^3.

    Vectors are labelled 1..7 by binary code, so the group arrives as a
    subgroup of Sym(7) (and of Alt(7)).
    """
    F = GF(2)
    companion = ((0, 1, 0), (0, 0, 1), (1, 1, 0))
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    gens = []
    for M in (companion, transvection):
        images = []
        for code in range(1, 8):
            v = (code & 1, (code >> 1) & 1, (code >> 2) & 1)
            w = tuple(sum(v[i] * M[i][j] for i in range(3)) % 2 for j in range(3))
            images.append(w[0] + 2 * w[1] + 4 * w[2] - 1)
        gens.append(Permutation(images))
    g = PermGroup(7, gens, name='PSL(3,2)')
    if g.order() != 168:
        raise AssertionError('GL(3,2) construction has wrong order')
    return g


def agl32_group():
    """AGL(3,2) = 2^3 : PSL(3,2) on the 8 vectors of GF(2)^3."""
    companion = ((0, 1, 0), (0, 0, 1), (1, 1, 0))
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    group = affine_perm_action(3, GF(2), [companion, transvection],
                               name='AGL(3,2)')
    if group.order() != 1344:
        raise AssertionError('AGL(3,2) construction has wrong order')
    return group


def alt4_matrix_action():
    """The 27-point affine group 3^3 : Alt(4), Alt(4) acting irreducibly.

    The module is the sum-zero submodule of the natural 4-point permutation
    module over GF(3), in the basis e_i - e_4.
    """
    F = GF(3)
    rot = ((0, 1, 0), (0, 0, 1), (1, 0, 0))             # (1 2 3)
    dbl = ((0, 1, 2), (1, 0, 2), (0, 0, 2))             # (1 2)(3 4)
    group = affine_perm_action(3, F, [rot, dbl], name='3^3:Alt(4)')
    if group.order() != 27 * 12:
        raise AssertionError('3^3:Alt(4) construction has wrong order')
    return group


def s0_affine_action(q):
    """V : S0(q) of degree q^2, S0(q) the monomial matrices of det +-1."""
    F = GF(q)
    w = F.primitive_element()
    w_inv = F.inv(w)
    gens = [
        ((w, 0), (0, w_inv)),
        ((1, 0), (0, F.neg(1))),
        ((0, 1), (1, 0)),
    ]
    group = affine_perm_action(2, F, gens, name=f'V:S0({q})')
    expected = q * q * 4 * (q - 1)
    if group.order() != expected:
        raise AssertionError(f'V:S0({q}) has order {group.order()}, want {expected}')
    return group


def _sl25_matrices(F):
    """Matrix pairs (s, t) over GF(q) with s^3 = t^5 = (st)^2 = -I.

    t is the companion matrix of x^2 - tau*x + 1 with tau the golden ratio
    (tau^2 = tau + 1), so t has order 10; candidate partners s have trace 1,
    determinant 1 and trace(s*t) = 0.  Such a pair generates SL(2,5) unless
    it degenerates, which the caller screens by an order check.
    """
    tau = None
    for a in range(F.q):
        if F.mul(a, a) == F.add(a, 1):
            tau = a
            break
    if tau is None:
        raise ValueError(f'GF({F.q}) has no golden-ratio element')
    t = ((0, 1), (F.neg(1), tau))
    one = 1
    for alpha in range(F.q):
        for beta in range(1, F.q):
            # trace(s*t) = beta - gamma + (1-alpha)*tau = 0
            gamma = F.add(beta, F.mul(F.sub(one, alpha), tau))
            det = F.sub(F.mul(alpha, F.sub(one, alpha)), F.mul(beta, gamma))
            if det == one:
                yield ((alpha, beta), (gamma, F.sub(one, alpha))), t


def sl25_affine_action(q):
    """V : SL(2,5) of degree q^2 for q in {9, 11, 19, 29}."""
    F = GF(q)
    expected = q * q * 120
    for s, t in _sl25_matrices(F):
        group = affine_perm_action(2, F, [s, t], name=f'V:SL(2,5) deg {q * q}')
        if group.order() == expected:
            return group
    raise AssertionError(f'no SL(2,5) subgroup located over GF({q})')


def agammal1_action(q):
    """AGammaL(1,q) = q : (q-1) : f on the q field elements."""
    F = GF(q)
    group = affine_perm_action(
        1, F, [((F.primitive_element(),),)],
        frobenius_power=1 if F.f > 1 else 0,
        name=f'AGammaL(1,{q})' if F.f > 1 else f'AGL(1,{q})')
    expected = q * (q - 1) * F.f
    if group.order() != expected:
        raise AssertionError('semilinear affine group has wrong order')
    return group
