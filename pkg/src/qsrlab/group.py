"""Permutation groups backed by a deterministic Schreier-Sims chain.

The chain stores, per level, a base point, the strong generators homed at
that level and a transversal mapping each orbit point beta to a word u with
u(base) = beta.  Base points are chosen greedily as the first moved point
of the first element that fails to sift, which keeps chains reproducible.
Transversals are only ever extended, never rebuilt, so each
(orbit point, generator) pair is Schreier-processed exactly once.
Group orders are exact Python integers throughout.
"""

from __future__ import annotations

import math
from random import Random

from .perm import (
    Permutation, compose_images, identity_images, invert_images,
)

__all__ = ['PermGroup', 'ChainLevel', 'OrderExceedsLimit', 'DegreeMismatch']


class OrderExceedsLimit(RuntimeError):
    """Raised when enumeration is asked for more elements than its limit."""


class DegreeMismatch(ValueError):
    pass


def _first_moved(images):
    for i, j in enumerate(images):
        if i != j:
            return i
    return None


class ChainLevel:
    """One level of a stabilizer chain.

    `acting` collects every strong generator of this level's group (homed
    here or deeper); `gens` only those homed exactly here.  `progress`
    tracks, per orbit point, how many acting generators have been applied,
    so Schreier processing can resume incrementally.
    """

    __slots__ = ('point', 'gens', 'acting', 'transversal', 'points', 'progress')

    def __init__(self, point, degree):
        self.point = point
        self.gens = []
        self.acting = []
        self.transversal = {point: identity_images(degree)}
        self.points = [point]
        self.progress = {point: 0}


class PermGroup:
    """Finite permutation group on {0..n-1} given by generators.

    The stabilizer chain is built lazily (or by calling build_chain) and is
    immutable once complete; a chain-complete group can be shared freely.
    """

    def __init__(self, degree, generators=(), base_hint=(), name=None):
        self.degree = int(degree)
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise DegreeMismatch(
                    f'generator degree {g.degree} != group degree {self.degree}')
            if not g.is_identity():
                gens.append(g)
        self.generators = tuple(gens)
        self.name = name
        self.base_hint = tuple(base_hint)
        self._levels = None
        self._order = None
        # Optional tag set by constructors ('symmetric'/'alternating', n)
        # letting class machinery use closed forms on natural actions.
        self.natural_kind = None

    # -- chain construction ------------------------------------------------

    def build_chain(self):
        if self._levels is not None:
            return self
        self._levels = [ChainLevel(p, self.degree) for p in self.base_hint]
        for g in self.generators:
            self._insert(g.images, 0)
        self._verify_chain()
        order = 1
        for level in self._levels:
            order *= len(level.transversal)
        self._order = order
        if math.factorial(self.degree) % order != 0:
            raise AssertionError('chain order does not divide degree!')
        return self

    def _sift_images(self, images, start=0):
        """Sift raw images through the chain; return (residue, stop_level)."""
        levels = self._levels
        for i in range(start, len(levels)):
            level = levels[i]
            beta = images[level.point]
            if beta == level.point:
                continue
            u = level.transversal.get(beta)
            if u is None:
                return images, i
            images = compose_images(images, invert_images(u))
        return images, len(levels)

    def _insert(self, images, start):
        """Add an element at the chain suffix `start`, restoring completeness.

        Levels deeper than `start` must be complete on entry; they are
        complete again on exit, so sifting always runs against a complete
        subchain and only genuinely new strong generators are homed.
        """
        residue, home = self._sift_images(images, start)
        moved = _first_moved(residue)
        if moved is None:
            return
        levels = self._levels
        if home == len(levels):
            levels.append(ChainLevel(moved, self.degree))
        levels[home].gens.append(residue)
        for i in range(home + 1):
            levels[i].acting.append(residue)
        for j in range(home, start - 1, -1):
            self._complete_level(j)

    def _complete_level(self, i):
        """Process pending orbit/Schreier pairs at level i until none remain."""
        level = self._levels[i]
        pts = level.points
        trans = level.transversal
        prog = level.progress
        point = level.point
        while True:
            idx = 0
            while idx < len(pts):
                beta = pts[idx]
                k = prog[beta]
                if k < len(level.acting):
                    u = trans[beta]
                    while k < len(level.acting):
                        s = level.acting[k]
                        k += 1
                        w = compose_images(u, s)
                        gamma = w[point]
                        v = trans.get(gamma)
                        if v is None:
                            trans[gamma] = w
                            pts.append(gamma)
                            prog[gamma] = 0
                        else:
                            schreier = compose_images(w, invert_images(v))
                            if _first_moved(schreier) is not None:
                                # nested inserts may append acting gens here;
                                # the loop conditions re-read lengths, so new
                                # pairs for this beta are picked up in place
                                self._insert(schreier, i + 1)
                    prog[beta] = k
                idx += 1
            if all(prog[b] == len(level.acting) for b in pts):
                return

    def _verify_chain(self):
        for g in self.generators:
            residue, _ = self._sift_images(g.images)
            if _first_moved(residue) is not None:
                raise AssertionError('generator fails to sift to identity')

    @property
    def chain(self):
        self.build_chain()
        return self._levels

    def base(self):
        return [level.point for level in self.chain if len(level.transversal) > 1]

    def strong_generators(self):
        out = []
        for level in self.chain:
            out.extend(Permutation(g, _checked=True) for g in level.gens)
        return out

    # -- queries -----------------------------------------------------------

    def order(self):
        self.build_chain()
        return self._order

    def contains(self, p):
        if isinstance(p, Permutation):
            if p.degree != self.degree:
                raise DegreeMismatch('membership test across degrees')
            p = p.images
        elif len(p) != self.degree:
            raise DegreeMismatch('membership test across degrees')
        self.build_chain()
        residue, _ = self._sift_images(tuple(p))
        return _first_moved(residue) is None

    __contains__ = contains

    def contains_images(self, images):
        self.build_chain()
        residue, _ = self._sift_images(images)
        return _first_moved(residue) is None

    def sift(self, p):
        """Residue of p after sifting (identity iff p is a member)."""
        self.build_chain()
        residue, _ = self._sift_images(tuple(p.images))
        return Permutation(residue, _checked=True)

    def elements(self, limit=None):
        """Yield every element exactly once as a Permutation."""
        for images in self.element_images(limit=limit):
            yield Permutation(images, _checked=True)

    def element_images(self, limit=None):
        """Yield raw image tuples, one per group element."""
        if limit is not None and self.order() > limit:
            raise OrderExceedsLimit(
                f'group order {self.order()} exceeds limit {limit}')
        levels = [lv for lv in self.chain if len(lv.transversal) > 1]

        # Chain decomposition: g = u_k ... u_1 u_0 with u_i from level i's
        # transversal, the level-0 representative applied last.  Level 0
        # varies fastest so deep prefixes h are reused; each element costs
        # one composition.
        def rec(i):
            if i == len(levels):
                yield identity_images(self.degree)
                return
            transversal = list(levels[i].transversal.values())
            for h in rec(i + 1):
                for u in transversal:
                    yield compose_images(h, u)

        yield from rec(0)

    def random_element(self, rng):
        """Uniform element: product of uniform transversal representatives."""
        if isinstance(rng, int):
            rng = Random(rng)
        images = identity_images(self.degree)
        for level in reversed(self.chain):
            if len(level.transversal) == 1:
                continue
            beta = rng.choice(level.points)
            images = compose_images(images, level.transversal[beta])
        return Permutation(images, _checked=True)

    def orbit(self, point):
        seen = {point}
        queue = [point]
        while queue:
            a = queue.pop(0)
            for g in self.generators:
                b = g.images[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    def orbits(self):
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(sorted(orb))
            remaining -= orb
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree if self.degree else True

    def stabilizer(self, point, name=None):
        """Point stabilizer as a new PermGroup (chain rebuilt with base hint)."""
        rebased = PermGroup(self.degree, self.generators,
                            base_hint=(point,) + tuple(self.base_hint))
        rebased.build_chain()
        gens = []
        for level in rebased._levels[1:]:
            gens.extend(Permutation(g, _checked=True) for g in level.gens)
        return PermGroup(self.degree, gens, name=name)

    def subgroup(self, generators, name=None):
        sub = PermGroup(self.degree, generators, name=name)
        for g in sub.generators:
            if not self.contains(g):
                raise ValueError('subgroup generator lies outside the group')
        return sub

    def __repr__(self):
        label = self.name or f'{len(self.generators)} gens'
        if self._order is not None:
            return f'PermGroup({label}, degree={self.degree}, order={self._order})'
        return f'PermGroup({label}, degree={self.degree})'
