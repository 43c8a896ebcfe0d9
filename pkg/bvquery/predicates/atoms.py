"""Invariant atoms: the finest partition of (point, tuple) pairs that is
closed under the generators of the index permutations and under
extensionality. Every invariant extensional predicate is a union of atoms.

Pairs are numbered tuple_index * |X| + point.
"""

from dataclasses import dataclass
import logging

from bvquery.exceptions import ResourceLimitError
from bvquery.group.action import point_permutation
from bvquery.group.permutation import symmetric_generators
from bvquery.predicates.predicate import Predicate, index_tuples
from bvquery.space.clopen import ClopenSet

DEFAULT_ATOM_CAP = 10 ** 6


class UnionFind(object):

    def __init__(self, count):
        self.parent = list(range(count))
        self.rank = [0] * count

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self):
        '''Members of every class, classes ordered by their least member.'''
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda members: members[0])


@dataclass(frozen=True)
class InvariantAtom(object):
    arity: int
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def to_dict(self):
        return {"arity": self.arity,
                "pairs": [[x, list(m)] for x, m in self.pairs]}


def _tuple_number(m, K):
    index = 0
    for eta in m:
        index = index * K + eta
    return index


def invariant_atoms(space, arity, cap=DEFAULT_ATOM_CAP, generators=None):
    size = space.size
    tuples = index_tuples(space.K, arity)
    total = size * len(tuples)
    if arity * total > cap:
        raise ResourceLimitError(
            "%d (point, tuple) pairs of arity %d exceed the cap of %d" % (
                total, arity, cap))
    if generators is None:
        generators = symmetric_generators(space.K) if space.K > 1 else []

    uf = UnionFind(total)
    for g in generators:
        table = point_permutation(space, g)
        for t, m in enumerate(tuples):
            target = _tuple_number(g.apply_tuple(m), space.K) * size
            base = t * size
            for x in range(size):
                uf.union(base + x, target + table[x])

    # Tuples enumerating the same elements collapse onto the tuple of least
    # indices in the same fibres.
    for x, point in enumerate(space.points):
        alpha = point.enumeration
        least = {}
        for eta, e in enumerate(alpha):
            least.setdefault(e, eta)
        for t, m in enumerate(tuples):
            star = tuple(least[alpha[eta]] for eta in m)
            uf.union(t * size + x, _tuple_number(star, space.K) * size + x)

    atoms = []
    for members in uf.classes():
        atoms.append(InvariantAtom(arity, tuple(
            (n % size, tuples[n // size]) for n in members)))
    logging.debug("arity %d: %d atoms over %d pairs" % (
        arity, len(atoms), total))
    return atoms


def predicate_from_atoms(space, atoms, arity):
    '''The predicate whose value at m is the set of x with (x, m) in an atom.'''
    bits = [0] * space.K ** arity
    for atom in atoms:
        for x, m in atom.pairs:
            bits[_tuple_number(m, space.K)] |= 1 << x
    return Predicate(space, arity, [ClopenSet(b, space.size) for b in bits])
