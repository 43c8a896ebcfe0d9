"""Predicates: maps from index tuples to clopen sets.

Tables are dense, one clopen set per tuple of range(K)^n in lexicographic
order.
"""

from dataclasses import dataclass
import itertools
import re

from bvquery.exceptions import PredicateError, SpaceMismatchError
from bvquery.logic.syntax import free_variables
from bvquery.space.clopen import ClopenSet


PREDICATE_VARIABLE = re.compile(r"^y([1-9][0-9]*)?$")


def predicate_variables(arity):
    if arity == 1:
        return ("y",)
    return tuple("y%d" % (i + 1) for i in range(arity))


def formula_arity(formula):
    '''Largest n with yn free in formula; y alone counts as arity 1.'''
    arity = 1
    for name in free_variables(formula):
        match = PREDICATE_VARIABLE.match(name)
        if match and match.group(1):
            arity = max(arity, int(match.group(1)))
    return arity


def formula_variables(formula, arity):
    '''
    The variables bound to an index tuple when formula defines a predicate
    of the given arity. At arity 1 either y or y1 may be used, not both.
    '''
    variables = predicate_variables(arity)
    free = free_variables(formula)
    if arity == 1 and "y1" in free and "y" not in free:
        variables = ("y1",)
    extra = [v for v in free if v not in variables]
    if extra:
        raise PredicateError("Free variables %s are not among %s" % (
            ", ".join(extra), ", ".join(variables)))
    return variables


def index_tuples(K, arity):
    return list(itertools.product(range(K), repeat=arity))


class Predicate(object):

    def __init__(self, space, arity, table):
        if arity < 1:
            raise PredicateError("Predicates need arity >= 1, not %d" % arity)
        table = tuple(table)
        if len(table) != space.K ** arity:
            raise PredicateError("Expected %d entries, got %d" % (
                space.K ** arity, len(table)))
        for clopen in table:
            if clopen.size != space.size:
                raise SpaceMismatchError(
                    "Entry from a space of %d points, expected %d" % (
                        clopen.size, space.size))
        self.space = space
        self.arity = arity
        self.table = table

    @classmethod
    def constant(cls, space, arity, clopen):
        return cls(space, arity, [clopen] * space.K ** arity)

    def tuple_index(self, m):
        if isinstance(m, int):
            m = (m,)
        if len(m) != self.arity:
            raise PredicateError("Tuple %r for a predicate of arity %d" % (
                m, self.arity))
        self.space.check_indices(m)
        index = 0
        for eta in m:
            index = index * self.space.K + eta
        return index

    def __call__(self, m):
        return self.table[self.tuple_index(m)]

    def tuples(self):
        return index_tuples(self.space.K, self.arity)

    def items(self):
        return zip(self.tuples(), self.table)

    def check_space(self, space):
        if space is not self.space and (
                space.space_hash() != self.space.space_hash()):
            raise SpaceMismatchError("Predicate belongs to another space")

    def __eq__(self, other):
        return (isinstance(other, Predicate) and self.arity == other.arity and
                self.table == other.table)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.arity, self.table))

    def __repr__(self):
        return "Predicate(arity=%d, sizes=%r)" % (
            self.arity, [len(c) for c in self.table])


def predicate_from_formula(space, formula, arity):
    '''p(m) = value of formula at m, with y (or y1..yn) bound to m.'''
    variables = formula_variables(formula, arity)
    return Predicate(space, arity, [
        space.evaluate(formula, m, variables)
        for m in index_tuples(space.K, arity)])


def predicate_complement(predicate):
    return Predicate(predicate.space, predicate.arity,
                     [~c for c in predicate.table])


@dataclass(frozen=True)
class ExtensionalityReport(object):
    extensional: bool
    left: tuple = ()
    right: tuple = ()
    point: int = -1

    def to_dict(self):
        out = {"extensional": self.extensional}
        if not self.extensional:
            out.update(left=list(self.left), right=list(self.right),
                       point=self.point)
        return out


def check_extensionality(predicate):
    '''
    Check p(m) & [m = m'] <= p(m') for all pairs, reporting the least pair
    (and least point) that fails.
    '''
    space = predicate.space
    tuples = predicate.tuples()
    for m, value in zip(tuples, predicate.table):
        for m2, value2 in zip(tuples, predicate.table):
            if m == m2:
                continue
            leak = (value & space.equality_clopen(m, m2)) - value2
            if leak:
                return ExtensionalityReport(False, m, m2, leak.members()[0])
    return ExtensionalityReport(True)


def fibre_size_predicate(space, size=1):
    '''q(eta) = points whose enumeration hits alpha(eta) exactly size times.'''
    table = []
    for eta in range(space.K):
        bits = 0
        for i, point in enumerate(space.points):
            alpha = point.enumeration
            if alpha.count(alpha[eta]) == size:
                bits |= 1 << i
        table.append(ClopenSet(bits, space.size))
    return Predicate(space, 1, table)
