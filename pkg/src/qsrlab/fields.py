"""Finite fields GF(p^f) and the matrix-to-permutation bridge for affine
and projective-line constructions.

Field elements are encoded as integers in [0, q): the coefficient vector
(c_0, ..., c_{f-1}) over GF(p) reads as the base-p integer sum(c_i p^i).
The defining polynomial is the lexicographically smallest monic
irreducible of degree f over GF(p), so every field here is reproducible
without external tables.
"""

from __future__ import annotations

import math

from .perm import Permutation
from .group import PermGroup

__all__ = ['FieldSpec', 'GF', 'affine_perm_action', 'projective_line_group']


def is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def prime_power(q):
    """Split a prime power q into (p, f); raise if q is not one."""
    if q < 2:
        raise ValueError(f'{q} is not a prime power')
    for p in range(2, int(math.isqrt(q)) + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            if q != 1:
                raise ValueError('not a prime power')
            return p, f
    return q, 1


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mulmod(a, b, mod, p):
    """Product of coefficient lists a, b reduced mod the monic poly `mod`."""
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    f = len(mod) - 1
    for k in range(len(out) - 1, f - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for j in range(f):
                out[k - f + j] = (out[k - f + j] - c * mod[j]) % p
    return _poly_trim(out[:f] + [0] * max(0, f - len(out)))


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b with b made monic
        inv_lead = pow(b[-1], p - 2, p)
        b_monic = [(c * inv_lead) % p for c in b]
        r = list(a)
        while len(r) >= len(b_monic) and r:
            c = r[-1]
            if c:
                shift = len(r) - len(b_monic)
                for j, bj in enumerate(b_monic):
                    r[shift + j] = (r[shift + j] - c * bj) % p
            r = _poly_trim(r[:-1] + ([r[-1]] if r[-1] else []))
            r = _poly_trim(r)
            if len(r) < len(b_monic):
                break
        a, b = b, _poly_trim(r)
    return a


def _is_irreducible(poly, p):
    """Monic poly of degree f: no roots and coprime to x^(p^i) - x, i <= f/2."""
    f = len(poly) - 1
    if f == 1:
        return True
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(poly)) % p == 0:
            return False
    x = [0, 1]
    xq = x
    for i in range(1, f // 2 + 1):
        # xq := xq^p mod poly
        acc = [1]
        base = xq
        e = p
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, poly, p)
            base = _poly_mulmod(base, base, poly, p)
            e >>= 1
        xq = acc
        diff = list(xq) + [0] * (2 - len(xq))
        diff[1] = (diff[1] - 1) % p
        diff = _poly_trim(diff)
        if not diff:
            return False
        if len(_poly_gcd(poly, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p, f):
    """Lexicographically smallest monic irreducible of degree f over GF(p)."""
    if f == 1:
        return (0, 1)
    for code in range(p ** f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError('no irreducible polynomial found')


class FieldSpec:
    """Characteristic, extension degree and defining polynomial of GF(p^f)."""

    __slots__ = ('p', 'f', 'poly', 'q')

    def __init__(self, p, f, poly=None):
        if not is_prime(p):
            raise ValueError(f'{p} is not prime')
        if f < 1:
            raise ValueError('extension degree must be >= 1')
        self.p = p
        self.f = f
        self.q = p ** f
        if poly is None:
            poly = smallest_irreducible(p, f)
        else:
            poly = tuple(c % p for c in poly)
            if len(poly) != f + 1 or poly[-1] != 1:
                raise ValueError('defining polynomial must be monic of degree f')
            if not _is_irreducible(list(poly), p):
                raise ValueError('defining polynomial is reducible')
        self.poly = tuple(poly)

    def __repr__(self):
        return f'FieldSpec(GF({self.p}^{self.f}), poly={self.poly})'


class GF:
    """Arithmetic in GF(p^f) on integer-coded elements.

    Addition/multiplication tables are precomputed for small q so affine
    constructions stay fast; everything is exact.
    """

    def __init__(self, p, f=None, poly=None):
        if isinstance(p, FieldSpec):
            self.spec = p
        else:
            if f is None:
                p, f = prime_power(p)
            self.spec = FieldSpec(p, f, poly)
        p, f, q = self.spec.p, self.spec.f, self.spec.q
        if q > 2048:
            raise ValueError('fields larger than 2048 elements are out of scope')
        self.p, self.f, self.q = p, f, q
        self._vecs = [self._decode(a) for a in range(q)]
        self._add = [[self._encode([(x + y) % p for x, y in zip(self._vecs[a], self._vecs[b])])
                      for b in range(q)] for a in range(q)]
        self._mul = [[self._encode(_poly_mulmod(_poly_trim(list(self._vecs[a])),
                                                _poly_trim(list(self._vecs[b])),
                                                list(self.spec.poly), p))
                      for b in range(q)] for a in range(q)]
        self._neg = [self._encode([(-x) % p for x in self._vecs[a]]) for a in range(q)]
        self._inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
        self._primitive = None

    def _decode(self, a):
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _encode(self, coeffs):
        a = 0
        for c in reversed(list(coeffs) + [0] * (self.f - len(coeffs))):
            a = a * self.p + c
        return a

    def coeffs(self, a):
        return self._vecs[a]

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('inversion of zero field element')
        return self._inv[a]

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self._mul[out][a]
            a = self._mul[a][a]
            e >>= 1
        return out

    def element_order(self, a):
        if a == 0:
            raise ValueError('zero has no multiplicative order')
        x, n = a, 1
        while x != 1:
            x = self._mul[x][a]
            n += 1
        return n

    def primitive_element(self):
        """Smallest element of multiplicative order q - 1."""
        if self._primitive is None:
            for a in range(1, self.q):
                if self.element_order(a) == self.q - 1:
                    self._primitive = a
                    break
        return self._primitive

    def frobenius(self, a):
        return self.pow(a, self.p)

    @property
    def one(self):
        return 1

    @property
    def zero(self):
        return 0


# -- matrices over GF(q) ----------------------------------------------------

def mat_mul(field, A, B):
    d = len(A)
    return tuple(
        tuple(_dot(field, A[i], [B[k][j] for k in range(d)]) for j in range(d))
        for i in range(d))


def _dot(field, row, col):
    acc = 0
    for x, y in zip(row, col):
        acc = field.add(acc, field.mul(x, y))
    return acc


def mat_vec(field, v, A):
    """Row vector times matrix (vectors act on the right)."""
    d = len(A)
    return tuple(_dot(field, v, [A[k][j] for k in range(d)]) for j in range(d))


def mat_det(field, A):
    """Cofactor expansion, d <= 4."""
    d = len(A)
    if d == 1:
        return A[0][0]
    if d > 4:
        raise ValueError('determinants only implemented for d <= 4')
    det = 0
    for j in range(d):
        minor = tuple(row[:j] + row[j + 1:] for row in A[1:])
        term = field.mul(A[0][j], mat_det(field, minor))
        det = field.add(det, term) if j % 2 == 0 else field.sub(det, term)
    return det


def identity_matrix(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def scalar_matrix(d, a):
    return tuple(tuple(a if i == j else 0 for j in range(d)) for i in range(d))


# -- affine permutation actions ---------------------------------------------

def _vector_index(field, v):
    idx = 0
    for x in reversed(v):
        idx = idx * field.q + x
    return idx


def _index_vector(field, d, idx):
    out = []
    for _ in range(d):
        out.append(idx % field.q)
        idx //= field.q
    return tuple(out)


def affine_perm_action(d, field, matrices, frobenius_power=0,
                       include_translations=True, name=None):
    """Permutation group of an affine construction on the q^d vectors.

    Generators: the given invertible matrices acting as v -> v*M, the field
    automorphism x -> x^(p^e) applied coordinatewise when frobenius_power
    e > 0, and (by default) the basis translations, which generate a regular
    normal subgroup.  Vectors are enumerated coefficient-lexicographically
    (base-p integer codes, ascending).
    """
    if isinstance(field, int):
        field = GF(field)
    n = field.q ** d
    points = [_index_vector(field, d, i) for i in range(n)]
    index = {v: i for i, v in enumerate(points)}
    gens = []
    names = []
    for M in matrices:
        if mat_det(field, M) == 0:
            raise ValueError('singular matrix in affine construction')
        gens.append(Permutation([index[mat_vec(field, v, M)] for v in points],
                                _checked=True))
        names.append('linear')
    if frobenius_power:
        e = frobenius_power
        frob = [field.pow(a, field.p ** e) for a in range(field.q)]
        gens.append(Permutation(
            [index[tuple(frob[x] for x in v)] for v in points], _checked=True))
        names.append('frobenius')
    if include_translations:
        for coord in range(d):
            for power in range(field.f):
                shift = field.p ** power
                gens.append(Permutation(
                    [index[v[:coord] + (field.add(v[coord], shift),) + v[coord + 1:]]
                     for v in points], _checked=True))
                names.append('translation')
    group = PermGroup(n, gens, name=name)
    group.affine_meta = {
        'field': field, 'dim': d, 'point_vectors': points,
        'gen_roles': names,
    }
    return group


# -- projective line ---------------------------------------------------------

def projective_line_group(q_or_field, kind='psl', name=None):
    """PSL(2,q), PGL(2,q) or PGammaL(2,q) acting on the projective line.

    Points are ordered [infinity, 0, 1, ..., q-1] by field code, with
    infinity last: [0, 1, ..., q-1, infinity].
    """
    field = GF(q_or_field) if isinstance(q_or_field, int) else q_or_field
    q = field.q
    INF = q
    points = list(range(q + 1))

    def moebius(fn):
        return Permutation([fn(x) for x in points], _checked=True)

    def translate(x):
        return field.add(x, 1) if x != INF else INF

    omega = field.primitive_element()
    omega2 = field.mul(omega, omega)

    def scale_by(c):
        def fn(x):
            return field.mul(x, c) if x != INF else INF
        return fn

    def neg_inverse(x):
        # x -> -1/x
        if x == INF:
            return 0
        if x == 0:
            return INF
        return field.neg(field.inv(x))

    def frobenius(x):
        return field.frobenius(x) if x != INF else INF

    gens = [moebius(translate), moebius(neg_inverse)]
    if kind == 'psl':
        gens.append(moebius(scale_by(omega2)))
    elif kind in ('pgl', 'pgammal'):
        gens.append(moebius(scale_by(omega)))
        if kind == 'pgammal':
            gens.append(moebius(frobenius))
    else:
        raise ValueError(f'unknown projective kind {kind!r}')
    group = PermGroup(q + 1, gens, name=name or f'{kind.upper()}(2,{q})')
    expected = {
        'psl': q * (q * q - 1) // math.gcd(2, q - 1),
        'pgl': q * (q * q - 1),
        'pgammal': q * (q * q - 1) * field.f,
    }[kind]
    if group.order() != expected:
        raise AssertionError(
            f'projective construction has order {group.order()}, expected {expected}')
    return group
