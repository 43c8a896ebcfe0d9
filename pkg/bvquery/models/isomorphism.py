"""Isomorphisms by backtracking over partial bijections.

Structures here have a handful of elements, so images are tried in
increasing order and every partial map is checked on the facts whose
elements are all already mapped. Results come out in lexicographic order.
"""

import itertools

from bvquery.models.structure import table_index


def _consistent(a, b, mapping, k):
    '''Check every fact of a that involves element k and earlier elements.'''
    n = a.size
    for (_, arity), rel_a, rel_b in zip(a.signature.relations, a.relations,
                                        b.relations):
        for t in itertools.product(range(k + 1), repeat=arity):
            if k not in t:
                continue
            image = tuple(mapping[x] for x in t)
            if (t in rel_a) != (image in rel_b):
                return False
    for (_, arity), fun_a, fun_b in zip(a.signature.functions, a.functions,
                                        b.functions):
        for t in itertools.product(range(k + 1), repeat=arity):
            value = fun_a[table_index(n, t)]
            if value > k or (k not in t and value != k):
                continue
            image = [mapping[x] for x in t]
            if fun_b[table_index(n, image)] != mapping[value]:
                return False
    for value_a, value_b in zip(a.constants, b.constants):
        if value_a == k and mapping[k] != value_b:
            return False
    return True


def find_isomorphisms(a, b):
    '''Every bijection range(n) -> range(n) carrying a onto b, as tuples.'''
    if a.size != b.size or a.signature != b.signature:
        return []
    n = a.size
    found = []
    mapping = []
    used = [False] * n

    def extend(k):
        if k == n:
            found.append(tuple(mapping))
            return
        for image in range(n):
            if used[image]:
                continue
            mapping.append(image)
            used[image] = True
            if _consistent(a, b, mapping, k):
                extend(k + 1)
            used[image] = False
            mapping.pop()

    extend(0)
    return found


def automorphisms(structure):
    return find_isomorphisms(structure, structure)


def isomorphic(a, b):
    return bool(find_isomorphisms(a, b))
