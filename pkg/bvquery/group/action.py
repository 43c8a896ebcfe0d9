"""The action of index permutations on points, clopen sets and predicates.

A permutation p moves the point (M, alpha) to (M, alpha o p^-1), brought
back to canonical form. Sets move pointwise.
"""

from dataclasses import dataclass
import itertools
import logging
from operator import itemgetter
import weakref

from bvquery.exceptions import SpaceMismatchError
from bvquery.group.permutation import check_size
from bvquery.space.clopen import ClopenSet
from bvquery.space.space import Point, canonical_enumeration

# Point tables kept per space; the generators are reused constantly.
MAX_CACHED_MOVES = 16

MOVES = weakref.WeakKeyDictionary()


def _picker(permutation):
    '''alpha -> alpha o permutation^-1, as a tuple.'''
    inverse = permutation.inverse().images
    if len(inverse) == 1:
        return lambda alpha: (alpha[inverse[0]],)
    return itemgetter(*inverse)


def point_permutation(space, permutation):
    '''The induced permutation of point indices, as a tuple.'''
    check_size(permutation, space.K)
    cache = MOVES.setdefault(space, {})
    table = cache.get(permutation.images)
    if table is not None:
        return table
    pick = _picker(permutation)
    out = []
    for point in space.points:
        beta = pick(point.enumeration)
        auts = space.automorphisms[point.model]
        if len(auts) > 1:
            beta = min(tuple(map(theta.__getitem__, beta)) for theta in auts)
        out.append(space.lookup(point.model, beta))
    table = tuple(out)
    if len(cache) >= MAX_CACHED_MOVES:
        cache.clear()
    cache[permutation.images] = table
    logging.debug("built point table for %s" % permutation.to_cycles())
    return table


def apply_permutation(space, permutation, target):
    '''Move a Point, a point index or a ClopenSet by permutation.'''
    check_size(permutation, space.K)
    if isinstance(target, Point):
        beta = _picker(permutation)(target.enumeration)
        alpha = canonical_enumeration(space.automorphisms[target.model], beta)
        return Point(target.model, alpha)
    if isinstance(target, int):
        return point_permutation(space, permutation)[target]
    if isinstance(target, ClopenSet):
        if target.size != space.size:
            raise SpaceMismatchError("Clopen set of %d points in a space of %d" %
                                     (target.size, space.size))
        table = point_permutation(space, permutation)
        bits = 0
        for i in target:
            bits |= 1 << table[i]
        return ClopenSet(bits, space.size)
    raise TypeError("Cannot move %r" % (target,))


@dataclass(frozen=True)
class InvarianceReport(object):
    invariant: bool
    permutation: int = -1
    indices: tuple = ()

    def to_dict(self):
        out = {"invariant": self.invariant}
        if not self.invariant:
            out["permutation"] = self.permutation
            out["indices"] = list(self.indices)
        return out


def check_invariance(space, predicate, permutations):
    '''
    Check p(pi(m)) == pi . p(m) for every supplied permutation and every
    tuple m; report the least (permutation position, tuple) that fails.
    '''
    predicate.check_space(space)
    for position, permutation in enumerate(permutations):
        check_size(permutation, space.K)
        for m in itertools.product(range(space.K), repeat=predicate.arity):
            moved = apply_permutation(space, permutation, predicate(m))
            if moved != predicate(permutation.apply_tuple(m)):
                logging.debug("invariance fails for %s at %r" % (
                    permutation.to_cycles(), m))
                return InvarianceReport(False, position, m)
    return InvarianceReport(True)
