"""Permutations of the index set {0, ..., K-1}."""

import random
import re

from bvquery.exceptions import PermutationError

CYCLE = re.compile(r"\(([^()]*)\)")


class Permutation(object):

    """
    A bijection of range(K) given by its image array: p(i) == p.images[i].
    Composition reads right to left, (p * q)(i) == p(q(i)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError("%r is not a permutation" % (images,))
        self.images = images

    def __call__(self, index):
        return self.images[index]

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return "Permutation(%s)" % self.to_cycles()

    def apply_tuple(self, indices):
        return tuple(self.images[i] for i in indices)

    def inverse(self):
        out = [0] * len(self.images)
        for i, image in enumerate(self.images):
            out[image] = i
        return Permutation(out)

    def is_identity(self):
        return all(i == image for i, image in enumerate(self.images))

    def to_cycles(self):
        '''One-line cycle notation, fixed points omitted; "()" for identity.'''
        seen = set()
        cycles = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            current = self.images[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self.images[current]
            cycles.append("(%s)" % " ".join(str(i) for i in cycle))
        return "".join(cycles) or "()"


def check_size(permutation, K):
    if len(permutation) != K:
        raise PermutationError("Permutation of %d indices used with K=%d" % (
            len(permutation), K))


def compose(p, q):
    check_size(q, len(p))
    return Permutation([p.images[i] for i in q.images])


def identity(K):
    return Permutation(range(K))


def transposition(K, a, b):
    images = list(range(K))
    images[a], images[b] = images[b], images[a]
    return Permutation(images)


def cycle(K, elements):
    '''The cycle sending elements[i] to elements[i + 1].'''
    images = list(range(K))
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise PermutationError("Repeated index in cycle %r" % (elements,))
    for i, e in enumerate(elements):
        if not 0 <= e < K:
            raise PermutationError("Index %d outside 0..%d" % (e, K - 1))
        images[e] = elements[(i + 1) % len(elements)]
    return Permutation(images)


def parse_cycles(text, K):
    '''Parse "(0 1)(2 3 4)" (spaces or commas) into a permutation of range(K).'''
    text = text.strip()
    if CYCLE.sub("", text).strip():
        raise PermutationError("Cannot parse cycle notation %r" % text)
    result = identity(K)
    for body in CYCLE.findall(text):
        words = body.replace(",", " ").split()
        try:
            elements = [int(w) for w in words]
        except ValueError:
            raise PermutationError("Cannot parse cycle notation %r" % text)
        if elements:
            result = compose(result, cycle(K, elements))
    return result


def symmetric_generators(K):
    '''The transposition (0 1) and the K-cycle, which generate S_K.'''
    if K < 2:
        raise PermutationError("Need K >= 2 for generators, not %d" % K)
    gens = [transposition(K, 0, 1), cycle(K, range(K))]
    if gens[0] == gens[1]:
        return gens[:1]
    return gens


def group_closure(generators):
    '''All products of the generators (breadth first from the identity).'''
    generators = list(generators)
    if not generators:
        return set()
    start = identity(len(generators[0]))
    seen = set([start])
    frontier = [start]
    while frontier:
        following = []
        for p in frontier:
            for g in generators:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    following.append(q)
        frontier = following
    return seen


def random_permutations(K, count, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        images = list(range(K))
        rng.shuffle(images)
        out.append(Permutation(images))
    return out
