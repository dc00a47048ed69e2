"""Permutations on {0..n-1} stored as image tuples.

Composition is left-to-right throughout the library: (a * b)(x) = b(a(x)).
Points are 0-based internally; anything user-facing (datasets, cycle
strings, reports) is 1-based.
"""

from __future__ import annotations

import math
from functools import reduce

__all__ = [
    'Permutation', 'CycleType', 'compose_images', 'invert_images',
    'identity_images', 'perm_order', 'cycle_lengths',
]


def identity_images(n):
    return tuple(range(n))


def compose_images(a, b):
    """Raw image-tuple product, apply a then b."""
    return tuple(b[x] for x in a)


def invert_images(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def cycle_lengths(images):
    """Lengths of all cycles, fixed points included."""
    n = len(images)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if seen[i]:
            continue
        length = 1
        seen[i] = 1
        j = images[i]
        while j != i:
            seen[j] = 1
            length += 1
            j = images[j]
        out.append(length)
    return out


def perm_order(images):
    return reduce(math.lcm, cycle_lengths(images), 1)


class CycleType:
    """Multiset of cycle lengths in canonical (length, count) form."""

    __slots__ = ('pairs',)

    def __init__(self, pairs):
        pairs = tuple(sorted((int(l), int(c)) for l, c in pairs))
        for length, count in pairs:
            if length < 1 or count < 1:
                raise ValueError('cycle lengths and counts must be positive')
        if len({l for l, _ in pairs}) != len(pairs):
            raise ValueError('repeated cycle length in cycle type')
        self.pairs = pairs

    @classmethod
    def from_lengths(cls, lengths):
        counts = {}
        for length in lengths:
            counts[length] = counts.get(length, 0) + 1
        return cls(sorted(counts.items()))

    @classmethod
    def parse(cls, text):
        """Parse compact notation like '1^1 5^2' (also accepts '5' for 5^1)."""
        pairs = []
        for token in text.split():
            if '^' in token:
                length, count = token.split('^')
            else:
                length, count = token, 1
            pairs.append((int(length), int(count)))
        return cls(pairs)

    @property
    def degree(self):
        return sum(l * c for l, c in self.pairs)

    def count_of(self, length):
        for l, c in self.pairs:
            if l == length:
                return c
        return 0

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __str__(self):
        return ' '.join(f'{l}^{c}' for l, c in self.pairs)

    def __repr__(self):
        return f'CycleType({self})'


class Permutation:
    """Immutable permutation of {0..n-1}; degree fixed at construction."""

    __slots__ = ('images',)

    def __init__(self, images, _checked=False):
        images = tuple(images)
        if not _checked:
            n = len(images)
            seen = bytearray(n)
            for x in images:
                if not 0 <= x < n or seen[x]:
                    raise ValueError('images do not form a bijection of 0..n-1')
                seen[x] = 1
        object.__setattr__(self, 'images', images)

    def __setattr__(self, name, value):
        raise AttributeError('Permutation is immutable')

    @classmethod
    def identity(cls, n):
        return cls(identity_images(n), _checked=True)

    @classmethod
    def from_cycles(cls, n, cycles, one_based=False):
        shift = 1 if one_based else 0
        images = list(range(n))
        for cycle in cycles:
            cycle = [p - shift for p in cycle]
            for p in cycle:
                if not 0 <= p < n:
                    raise ValueError(f'point {p + shift} out of range for degree {n}')
            for a, b in zip(cycle, cycle[1:]):
                if images[a] != a:
                    raise ValueError('point repeated across cycles')
                images[a] = b
            if cycle:
                if images[cycle[-1]] != cycle[-1]:
                    raise ValueError('point repeated across cycles')
                images[cycle[-1]] = cycle[0]
        return cls(images, _checked=True)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        """Left-to-right product: (a * b)(x) = b(a(x))."""
        if len(self.images) != len(other.images):
            raise ValueError('degree mismatch in composition')
        return Permutation(compose_images(self.images, other.images), _checked=True)

    def inverse(self):
        return Permutation(invert_images(self.images), _checked=True)

    def __pow__(self, k):
        n = len(self.images)
        if k == 0:
            return Permutation.identity(n)
        base = self.images if k > 0 else invert_images(self.images)
        k = abs(k)
        result = identity_images(n)
        while k:
            if k & 1:
                result = compose_images(result, base)
            base = compose_images(base, base)
            k >>= 1
        return Permutation(result, _checked=True)

    def conjugated_by(self, h):
        """h^-1 * self * h, so fixed points map through h."""
        hi = invert_images(h.images)
        return Permutation(
            compose_images(compose_images(hi, self.images), h.images),
            _checked=True)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        return perm_order(self.images)

    def cycles(self, include_fixed=False):
        n = len(self.images)
        seen = bytearray(n)
        out = []
        for i in range(n):
            if seen[i]:
                continue
            seen[i] = 1
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen[j] = 1
                cycle.append(j)
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self):
        return CycleType.from_lengths(cycle_lengths(self.images))

    def fixed_points(self):
        return [i for i, j in enumerate(self.images) if i == j]

    def cycle_string(self, one_based=True):
        shift = 1 if one_based else 0
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join(
            '(' + ','.join(str(p + shift) for p in c) + ')' for c in cycles)

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f'Permutation({self.cycle_string(one_based=False)}, n={self.degree})'
