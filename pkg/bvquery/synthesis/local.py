"""Local defining formulas.

For a point (M, alpha) inside a clopen set U and target indices eta0, the
local formula is delta = chi & Eq_alpha, where chi completely describes M
on the elements enumerated at xi and Eq_alpha records which of the xi and
eta0 indices alpha identifies. xi starts as the least index of every fibre
and grows by the least unused index until the value of delta at
(xi, eta0) lies inside U.

Any other point satisfying delta at some (zeta, eta) with the same equality
pattern is carried into that value by a permutation sending zeta to xi and
eta to eta0 (see zeta_witness and induced_permutation).
"""

from dataclasses import dataclass
import logging

from bvquery.exceptions import (
    FibreExhaustedError, IndexRangeError, PatternMismatchError, PredicateError,
)
from bvquery.group.permutation import Permutation
from bvquery.logic.syntax import (
    And, Equals, Top, Var, conjunction, exists_all, fresh_variable,
)
from bvquery.models.describe import complete_description
from bvquery.predicates.predicate import predicate_variables


def _names(prefix, count):
    return tuple("%s%d" % (prefix, i + 1) for i in range(count))


def eq_alpha_formula(alpha, xi, eta0, variables=None, targets=None):
    '''x_i = x_j where alpha agrees on xi_i, xi_j; x_i = y_t likewise.'''
    for eta in tuple(xi) + tuple(eta0):
        if not 0 <= eta < len(alpha):
            raise IndexRangeError("Index %d outside 0..%d" % (
                eta, len(alpha) - 1))
    xs = variables or _names("x", len(xi))
    ys = targets or predicate_variables(len(eta0))
    parts = []
    for i in range(len(xi)):
        for j in range(i + 1, len(xi)):
            if alpha[xi[i]] == alpha[xi[j]]:
                parts.append(Equals(Var(xs[i]), Var(xs[j])))
    for i in range(len(xi)):
        for t in range(len(eta0)):
            if alpha[xi[i]] == alpha[eta0[t]]:
                parts.append(Equals(Var(xs[i]), Var(ys[t])))
    return conjunction(parts)


def _least_unused(beta, element, taken):
    for k, e in enumerate(beta):
        if e == element and k not in taken:
            return k
    raise FibreExhaustedError(element)


def _same_pattern(left, right):
    return all((left[s] == left[t]) == (right[s] == right[t])
               for s in range(len(left)) for t in range(len(left)))


def align_targets(beta, eta, eta0):
    '''
    Indices enumerating the same elements as eta under beta but repeating
    exactly where eta0 repeats. Indices of eta are kept when possible.
    '''
    out = []
    for t in range(len(eta)):
        earlier = [s for s in range(t) if eta0[s] == eta0[t]]
        if earlier:
            if beta[eta[t]] != beta[out[earlier[0]]]:
                raise PatternMismatchError(
                    "Targets %r enumerate different elements where %r repeats" %
                    (tuple(eta), tuple(eta0)))
            out.append(out[earlier[0]])
        elif eta[t] not in out:
            out.append(eta[t])
        else:
            out.append(_least_unused(beta, beta[eta[t]], set(out)))
    return tuple(out)


def zeta_witness(beta, b, eta, xi, eta0):
    '''
    Indices zeta with beta(zeta) = b such that (zeta, eta) repeats exactly
    where (xi, eta0) does. Forced choices come from eta; free choices take
    the least index of the fibre not yet used.
    '''
    if len(b) != len(xi) or len(eta) != len(eta0):
        raise PatternMismatchError("Tuple lengths do not match")
    if not _same_pattern(tuple(eta), tuple(eta0)):
        raise PatternMismatchError("Targets %r and %r repeat differently" % (
            tuple(eta), tuple(eta0)))
    zeta = []
    taken = set(eta)
    for i, index in enumerate(xi):
        if index in eta0:
            choice = eta[list(eta0).index(index)]
        elif index in xi[:i]:
            choice = zeta[list(xi).index(index)]
        else:
            choice = _least_unused(beta, b[i], taken)
            taken.add(choice)
        if beta[choice] != b[i]:
            raise PatternMismatchError(
                "Index %d enumerates %d, not %d" % (choice, beta[choice], b[i]))
        zeta.append(choice)
    return tuple(zeta)


def induced_permutation(zeta, eta, xi, eta0, K):
    '''
    The permutation sending eta to eta0 and zeta to xi, the other indices
    going in increasing order onto the remaining targets.
    '''
    mapping = {}
    for source, target in zip(tuple(eta) + tuple(zeta),
                              tuple(eta0) + tuple(xi)):
        if mapping.setdefault(source, target) != target:
            raise PatternMismatchError("Index %d sent to both %d and %d" % (
                source, mapping[source], target))
    if len(set(mapping.values())) != len(mapping):
        raise PatternMismatchError("Two indices sent to the same target")
    rest_sources = [k for k in range(K) if k not in mapping]
    rest_targets = sorted(set(range(K)) - set(mapping.values()))
    mapping.update(zip(rest_sources, rest_targets))
    return Permutation([mapping[k] for k in range(K)])


@dataclass(frozen=True)
class LocalDatum(object):
    point: int
    formula: object
    xi: tuple
    eta0: tuple
    clopen: object
    variables: tuple
    targets: tuple

    def existential(self):
        return exists_all(self.variables, self.formula)


def local_formula(space, point_index, eta0, region):
    '''A LocalDatum for point_index with value inside region.'''
    if point_index not in region:
        raise PredicateError("Point %d is not in the region" % point_index)
    eta0 = tuple(eta0)
    space.check_indices(eta0)
    point = space.points[point_index]
    model = space.model(point.model)
    alpha = point.enumeration
    ys = predicate_variables(len(eta0))

    least = {}
    for eta, e in enumerate(alpha):
        least.setdefault(e, eta)
    xi = sorted(least.values())
    while True:
        xs = _names("x", len(xi))
        bound = fresh_variable("y", set(xs) | set(ys))
        chi = complete_description(model, [alpha[eta] for eta in xi],
                                   bound=bound, names=xs)
        eq = eq_alpha_formula(alpha, xi, eta0, xs, ys)
        delta = chi if isinstance(eq, Top) else And(chi, eq)
        value = space.evaluate(delta, tuple(xi) + eta0, xs + ys)
        if value <= region:
            break
        xi.append(min(k for k in range(space.K) if k not in xi))
    logging.debug("local formula for point %d at %r uses %d indices" % (
        point_index, eta0, len(xi)))
    return LocalDatum(point_index, delta, tuple(xi), eta0, value, xs, ys)
