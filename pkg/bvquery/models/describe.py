from bvquery.exceptions import StructureError
from bvquery.logic.syntax import (
    Atom, Equals, Forall, Graph, Not, Var, conjunction, disjunction,
)
from bvquery.models.structure import domain_tuples


def complete_description(structure, elems, bound="y", names=None):
    '''
    A formula chi(x1, ..., xk) true of b in a structure N exactly when some
    isomorphism from structure to N sends elems to b.

    Atomic facts are stated once, on the first occurrence of each element;
    the pairwise (in)equalities pin the remaining positions and the closing
    clause `all bound (bound = x1 | ...)` rules out further elements.
    '''
    elems = tuple(elems)
    n = structure.size
    if any(not 0 <= e < n for e in elems):
        raise StructureError("Elements %r lie outside the domain" % (elems,))
    if set(elems) != set(range(n)):
        raise StructureError("Elements %r do not cover the domain of size %d" %
                             (elems, n))
    names = list(names or ["x%d" % (i + 1) for i in range(len(elems))])
    if bound in names:
        raise StructureError("Bound variable %s clashes with %s" % (
            bound, ", ".join(names)))

    first = {}
    for position, e in enumerate(elems):
        first.setdefault(e, position)
    positions = sorted(first.values())
    var_of = dict((e, Var(names[p])) for e, p in first.items())

    parts = []
    sig = structure.signature
    for (name, arity), table in zip(sig.relations, structure.relations):
        for ps in domain_tuples(len(positions), arity):
            t = tuple(elems[positions[i]] for i in ps)
            atom = Atom(name, tuple(var_of[e] for e in t))
            parts.append(atom if t in table else Not(atom))
    for name, arity in sig.functions:
        for ps in domain_tuples(len(positions), arity):
            t = tuple(elems[positions[i]] for i in ps)
            value = structure.function_value(name, t)
            parts.append(Graph(name, tuple(var_of[e] for e in t) +
                               (var_of[value],)))
    for name, value in zip(sig.constants, structure.constants):
        parts.append(Graph(name, (var_of[value],)))
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            eq = Equals(Var(names[i]), Var(names[j]))
            parts.append(eq if elems[i] == elems[j] else Not(eq))
    parts.append(Forall(bound, disjunction(
        Equals(Var(bound), Var(names[p])) for p in positions)))
    return conjunction(parts)
