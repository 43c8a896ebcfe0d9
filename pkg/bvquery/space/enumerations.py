"""Enumerations: surjections from the index set {0, ..., K-1} onto a model.

In balanced mode every element is hit exactly K/n times; in unbalanced
mode any surjection is allowed.
"""

import itertools

from bvquery.exceptions import EnumerationError

BALANCED = "balanced"
UNBALANCED = "unbalanced"
MODES = (BALANCED, UNBALANCED)


def check_mode(mode):
    if mode not in MODES:
        raise EnumerationError("Unknown mode %r, expected one of %s" % (
            mode, ", ".join(MODES)))


def _balanced(size, K):
    fibre = K // size
    counts = [0] * size
    current = []

    def extend():
        if len(current) == K:
            yield tuple(current)
            return
        for e in range(size):
            if counts[e] < fibre:
                counts[e] += 1
                current.append(e)
                for found in extend():
                    yield found
                current.pop()
                counts[e] -= 1

    return extend()


def enumerate_enumerations(structure, K, mode=BALANCED):
    '''All enumerations of structure for the mode, in lexicographic order.'''
    check_mode(mode)
    size = structure if isinstance(structure, int) else structure.size
    if K < size:
        raise EnumerationError("K=%d is too small for a model of size %d" % (
            K, size))
    if mode == BALANCED:
        if K % size:
            raise EnumerationError(
                "Balanced mode needs K=%d divisible by the model size %d" % (
                    K, size))
        return list(_balanced(size, K))
    return [alpha for alpha in itertools.product(range(size), repeat=K)
            if len(set(alpha)) == size]


def fibres(alpha):
    '''Map each element to the sorted list of indices enumerating it.'''
    out = {}
    for index, e in enumerate(alpha):
        out.setdefault(e, []).append(index)
    return out


def check_enumeration(alpha, size, K, mode):
    if len(alpha) != K:
        raise EnumerationError("Enumeration has length %d, expected K=%d" % (
            len(alpha), K))
    if any(not 0 <= e < size for e in alpha):
        raise EnumerationError("Enumeration %r leaves the domain" % (alpha,))
    counts = [0] * size
    for e in alpha:
        counts[e] += 1
    if 0 in counts:
        raise EnumerationError("Enumeration %r is not surjective" % (alpha,))
    if mode == BALANCED and len(set(counts)) != 1:
        raise EnumerationError("Enumeration %r is not balanced" % (alpha,))
