"""The space of enumerated models and its Boolean-valued interpretation.

A point is a model of the class together with an enumeration, taken up to
automorphisms of the model: the stored enumeration is the least of its
automorphic images. Points are listed model by model, each model's points in
lexicographic order of their enumerations.

The value of a formula at a tuple of indices is the set of points whose
model satisfies the formula at the enumerated elements. The space keeps a
bit mask of points per model and per (index, element), so a value is a
union of intersections of masks.
"""

from dataclasses import dataclass
import hashlib
import itertools
import logging

from bvquery.exceptions import (
    EnumerationError, IndexRangeError, UnassignedVariableError,
)
from bvquery.logic.printer import print_formula
from bvquery.logic.syntax import Equals, Var, free_variables
from bvquery.models.describe import complete_description
from bvquery.models.evaluate import evaluate_classical
from bvquery.models.isomorphism import automorphisms
from bvquery.space.clopen import ClopenSet
from bvquery.space.enumerations import (
    BALANCED, check_enumeration, check_mode, enumerate_enumerations,
)
from bvquery.utils import dumps_json


@dataclass(frozen=True)
class Point(object):
    model: int
    enumeration: tuple


def default_variables(count):
    return tuple("x%d" % (i + 1) for i in range(count))


def canonical_enumeration(auts, alpha):
    '''Least image of alpha under the automorphisms (as element maps).'''
    return min(tuple(theta[a] for a in alpha) for theta in auts)


class Space(object):

    def __init__(self, model_class, K, mode=BALANCED):
        check_mode(mode)
        if K < 1:
            raise EnumerationError("K must be positive, not %d" % K)
        self.model_class = model_class
        self.K = K
        self.mode = mode
        self.automorphisms = [automorphisms(m) for m in model_class]
        self.points = []
        self.ranges = []
        self._index = {}
        for model_index, model in enumerate(model_class):
            start = len(self.points)
            for alpha in enumerate_enumerations(model, K, mode):
                if canonical_enumeration(
                        self.automorphisms[model_index], alpha) != alpha:
                    continue
                self._index[(model_index, alpha)] = len(self.points)
                self.points.append(Point(model_index, alpha))
            self.ranges.append((start, len(self.points)))
            logging.debug("model %d: %d points" % (
                model_index, len(self.points) - start))

        self.size = len(self.points)
        width = max([m.size for m in model_class] or [0])
        self.model_masks = []
        for start, stop in self.ranges:
            self.model_masks.append(((1 << stop) - 1) ^ ((1 << start) - 1))
        self.fibre_masks = [[0] * width for _ in range(K)]
        for i, point in enumerate(self.points):
            bit = 1 << i
            for eta, e in enumerate(point.enumeration):
                self.fibre_masks[eta][e] |= bit
        self._cache = {}
        self._calls = {}
        self._hash = None

    def __len__(self):
        return self.size

    def model(self, index):
        return self.model_class[index]

    def full(self):
        return ClopenSet.full(self.size)

    def empty(self):
        return ClopenSet.empty(self.size)

    def clopen(self, indices):
        return ClopenSet.from_indices(indices, self.size)

    def fibre(self, eta, element):
        '''Points whose enumeration sends eta to element.'''
        self.check_indices((eta,))
        row = self.fibre_masks[eta]
        return ClopenSet(row[element] if element < len(row) else 0, self.size)

    def check_indices(self, xi):
        for eta in xi:
            if not isinstance(eta, int) or not 0 <= eta < self.K:
                raise IndexRangeError("Index %r outside 0..%d" % (
                    eta, self.K - 1))

    def point_index(self, model_index, alpha):
        '''Index of the point of (model, alpha), canonicalising alpha.'''
        if not 0 <= model_index < len(self.model_class):
            raise EnumerationError("No model with index %d" % model_index)
        alpha = tuple(alpha)
        check_enumeration(alpha, self.model_class[model_index].size, self.K,
                          self.mode)
        alpha = canonical_enumeration(self.automorphisms[model_index], alpha)
        return self._index[(model_index, alpha)]

    def lookup(self, model_index, alpha):
        '''Index of a point given its canonical enumeration, unchecked.'''
        return self._index[(model_index, alpha)]

    def canonical_point(self, model_index, alpha):
        return self.points[self.point_index(model_index, alpha)]

    def evaluate(self, formula, xi, variables=None):
        xi = tuple(xi)
        variables = tuple(variables or default_variables(len(xi)))
        # Formulas are frozen, so the object itself keys repeat calls.
        call = (formula, xi, variables)
        bits = self._calls.get(call)
        if bits is None:
            bits = self._lookup(formula, xi, variables)
            self._calls[call] = bits
        return ClopenSet(bits, self.size)

    def _lookup(self, formula, xi, variables):
        self.check_indices(xi)
        if len(variables) != len(xi):
            raise UnassignedVariableError(
                "%d variables for %d indices" % (len(variables), len(xi)))
        free = free_variables(formula)
        missing = [v for v in free if v not in variables]
        if missing:
            raise UnassignedVariableError(
                "Free variable %s has no index" % ", ".join(missing))
        binding = dict(zip(variables, xi))
        used = [v for v in variables if v in free]
        key = (print_formula(formula), tuple((v, binding[v]) for v in used))
        bits = self._cache.get(key)
        if bits is None:
            bits = self._evaluate(formula, used, [binding[v] for v in used])
            self._cache[key] = bits
            logging.debug("evaluated %s at %s" % (key[0], key[1]))
        return bits

    def _evaluate(self, formula, used, indices):
        bits = 0
        for model_index, model in enumerate(self.model_class):
            start, stop = self.ranges[model_index]
            if start == stop:
                continue
            if model.size ** len(used) <= stop - start:
                for elements in itertools.product(range(model.size),
                                                  repeat=len(used)):
                    if not evaluate_classical(model, formula,
                                              dict(zip(used, elements))):
                        continue
                    mask = self.model_masks[model_index]
                    for eta, e in zip(indices, elements):
                        mask &= self.fibre_masks[eta][e]
                    bits |= mask
            else:
                # More element tuples than points: group the points instead.
                groups = {}
                for i in range(start, stop):
                    alpha = self.points[i].enumeration
                    key = tuple(alpha[eta] for eta in indices)
                    groups[key] = groups.get(key, 0) | (1 << i)
                for elements, mask in groups.items():
                    if evaluate_classical(model, formula,
                                          dict(zip(used, elements))):
                        bits |= mask
        return bits

    def equality_clopen(self, m, m2):
        '''The value of m = m2, componentwise for tuples.'''
        m, m2 = tuple(m), tuple(m2)
        if len(m) != len(m2):
            raise IndexRangeError("Tuples %r and %r differ in length" % (m, m2))
        result = self.full()
        for a, b in zip(m, m2):
            result = result & self.evaluate(Equals(Var("x1"), Var("x2")),
                                            (a, b))
        return result

    def point_separation(self, index):
        '''A formula and index tuple whose value is exactly {index}.'''
        point = self.points[index]
        model = self.model_class[point.model]
        xi = tuple(range(self.K))
        delta = complete_description(model, point.enumeration)
        return delta, xi

    def to_dict(self):
        return {
            "K": self.K,
            "mode": self.mode,
            "models": self.model_class.to_dict(),
            "points": [[p.model, list(p.enumeration)] for p in self.points],
        }

    def space_hash(self):
        if self._hash is None:
            content = dumps_json(self.to_dict()).encode("utf-8")
            self._hash = hashlib.sha256(content).hexdigest()
        return self._hash


def evaluate_bvm(space, formula, xi, variables=None):
    return space.evaluate(formula, xi, variables)


def canonical_point(space, model_index, alpha):
    return space.canonical_point(model_index, alpha)


def equality_clopen(space, m, m2):
    return space.equality_clopen(m, m2)


def point_separation(space, index):
    return space.point_separation(index)
