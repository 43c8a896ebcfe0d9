"""Elimination of nested terms in favour of graph atoms.

Every function application and constant inside an atom is replaced by a
fresh existentially quantified variable, tied to its value by the graph atom
of the symbol, so r(f(c)) becomes ex z ex z1 (c(z) & f(z, z1) & r(z1)).
"""

from bvquery.logic.syntax import (
    Apply, Atom, Const, Equals, Graph, Not, Var, BINARY, QUANTIFIERS,
    all_variables, check_formula, conjunction, exists_all, fresh_variable,
)


class _Flattener(object):

    def __init__(self, avoid):
        self.avoid = set(avoid)

    def fresh(self):
        name = fresh_variable("z", self.avoid)
        self.avoid.add(name)
        return name

    def args(self, args, graphs, bound):
        out = []
        for arg in args:
            out.append(Var(self.term(arg, graphs, bound)))
        return tuple(out)

    def term(self, term, graphs, bound):
        '''Return the variable naming term, appending graph atoms to graphs.'''
        if isinstance(term, Var):
            return term.name
        if isinstance(term, Const):
            name = self.fresh()
            bound.append(name)
            graphs.append(Graph(term.name, (Var(name),)))
            return name
        inner = self.args(term.args, graphs, bound)
        name = self.fresh()
        bound.append(name)
        graphs.append(Graph(term.name, inner + (Var(name),)))
        return name

    def wrap(self, graphs, bound, core):
        if not graphs:
            return core
        return exists_all(bound, conjunction(graphs + [core]))

    def equality(self, left, right):
        if isinstance(left, Var) and isinstance(right, Var):
            return Equals(left, right)
        # A single application or constant against a variable is its graph.
        if isinstance(left, Var):
            left, right = right, left
        if isinstance(right, Var):
            graphs, bound = [], []
            if isinstance(left, Const):
                return Graph(left.name, (right,))
            inner = self.args(left.args, graphs, bound)
            return self.wrap(graphs, bound,
                             Graph(left.name, inner + (right,)))
        graphs, bound = [], []
        a = self.term(left, graphs, bound)
        b = self.term(right, graphs, bound)
        return self.wrap(graphs, bound, Equals(Var(a), Var(b)))

    def formula(self, f):
        if isinstance(f, (Atom, Graph)):
            if all(isinstance(a, Var) for a in f.args):
                return f
            graphs, bound = [], []
            args = self.args(f.args, graphs, bound)
            return self.wrap(graphs, bound, type(f)(f.name, args))
        if isinstance(f, Equals):
            return self.equality(f.left, f.right)
        if isinstance(f, Not):
            return Not(self.formula(f.sub))
        if isinstance(f, BINARY):
            return type(f)(self.formula(f.left), self.formula(f.right))
        if isinstance(f, QUANTIFIERS):
            return type(f)(f.var, self.formula(f.body))
        return f


def translate_to_relational(formula, sig):
    check_formula(formula, sig)
    return _Flattener(all_variables(formula)).formula(formula)
