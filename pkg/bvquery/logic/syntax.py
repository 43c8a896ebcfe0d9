"""Abstract syntax of first order logic over a finite single sorted signature.

Terms and formulas are frozen dataclasses, so they hash, compare structurally
and can be shared between threads. Conjunction and disjunction are binary;
use `conjunction` / `disjunction` to build longer ones (left nested, with the
empty cases collapsing to `Top` / `Bottom`).
"""

from dataclasses import dataclass
import re

from bvquery.exceptions import (
    ArityError, SignatureError, UnknownSymbolError,
)

IDENTIFIER = re.compile(r"^[a-zA-Z][a-zA-Z0-9_]*$")

# Words the formula grammar claims for itself.
KEYWORDS = frozenset(["all", "ex", "true", "false"])

RELATION = "relation"
FUNCTION = "function"
CONSTANT = "constant"


@dataclass(frozen=True)
class Signature(object):
    relations: tuple = ()
    functions: tuple = ()
    constants: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "relations",
                           tuple((n, int(a)) for n, a in self.relations))
        object.__setattr__(self, "functions",
                           tuple((n, int(a)) for n, a in self.functions))
        object.__setattr__(self, "constants", tuple(self.constants))
        seen = set()
        for name in self.names():
            if not IDENTIFIER.match(name) or name in KEYWORDS:
                raise SignatureError("Invalid symbol name: %s" % name)
            if name in seen:
                raise SignatureError("Duplicate symbol name: %s" % name)
            seen.add(name)
        for name, arity in self.relations + self.functions:
            if arity < 1:
                raise SignatureError(
                    "Symbol %s needs a positive arity, not %d" % (name, arity))

    def names(self):
        return ([n for n, _ in self.relations] +
                [n for n, _ in self.functions] + list(self.constants))

    def kind(self, name):
        if name in dict(self.relations):
            return RELATION
        if name in dict(self.functions):
            return FUNCTION
        if name in self.constants:
            return CONSTANT
        return None

    def arity(self, name):
        kind = self.kind(name)
        if kind == RELATION:
            return dict(self.relations)[name]
        if kind == FUNCTION:
            return dict(self.functions)[name]
        if kind == CONSTANT:
            return 0
        raise UnknownSymbolError("Unknown symbol: %s" % name)

    def to_dict(self):
        return {
            "relations": [[n, a] for n, a in self.relations],
            "functions": [[n, a] for n, a in self.functions],
            "constants": list(self.constants),
        }


class Term(object):
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    name: str


@dataclass(frozen=True)
class Apply(Term):
    name: str
    args: tuple


class Formula(object):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    '''A relation symbol applied to terms.'''
    name: str
    args: tuple


@dataclass(frozen=True)
class Graph(Formula):
    '''The graph of a function (f(a..., b)) or constant (c(b)) as a relation.'''
    name: str
    args: tuple


@dataclass(frozen=True)
class Equals(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Exists, Forall)


def term_variables(term, out=None):
    '''Variables of a term in left to right order (with repeats).'''
    out = [] if out is None else out
    if isinstance(term, Var):
        out.append(term.name)
    elif isinstance(term, Apply):
        for arg in term.args:
            term_variables(arg, out)
    return out


def _free(formula, bound, out):
    if isinstance(formula, (Atom, Graph)):
        for arg in formula.args:
            for name in term_variables(arg):
                if name not in bound:
                    out.append(name)
    elif isinstance(formula, Equals):
        for name in term_variables(formula.left) + term_variables(formula.right):
            if name not in bound:
                out.append(name)
    elif isinstance(formula, Not):
        _free(formula.sub, bound, out)
    elif isinstance(formula, BINARY):
        _free(formula.left, bound, out)
        _free(formula.right, bound, out)
    elif isinstance(formula, QUANTIFIERS):
        _free(formula.body, bound | frozenset([formula.var]), out)
    return out


def free_variables(formula):
    '''Free variables of a formula in first-occurrence order.'''
    seen = []
    for name in _free(formula, frozenset(), []):
        if name not in seen:
            seen.append(name)
    return tuple(seen)


def all_variables(formula):
    '''Every variable name occurring in a formula, free or bound.'''
    names = set(_free(formula, frozenset(), []))
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, QUANTIFIERS):
            names.add(node.var)
            stack.append(node.body)
        elif isinstance(node, Not):
            stack.append(node.sub)
        elif isinstance(node, BINARY):
            stack.extend([node.left, node.right])
    return names


def fresh_variable(base, avoid):
    '''The first of base, base1, base2, ... not in avoid.'''
    if base not in avoid:
        return base
    index = 1
    while "%s%d" % (base, index) in avoid:
        index += 1
    return "%s%d" % (base, index)


def conjunction(parts):
    parts = list(parts)
    if not parts:
        return Top()
    result = parts[0]
    for part in parts[1:]:
        result = And(result, part)
    return result


def disjunction(parts):
    parts = list(parts)
    if not parts:
        return Bottom()
    result = parts[0]
    for part in parts[1:]:
        result = Or(result, part)
    return result


def exists_all(names, body):
    for name in reversed(list(names)):
        body = Exists(name, body)
    return body


def rename_term(term, old, new):
    if isinstance(term, Var):
        return Var(new) if term.name == old else term
    if isinstance(term, Apply):
        return Apply(term.name, tuple(rename_term(a, old, new) for a in term.args))
    return term


def rename_free(formula, old, new):
    '''Replace free occurrences of variable old by new (new must be fresh).'''
    if isinstance(formula, (Atom, Graph)):
        return type(formula)(formula.name,
                             tuple(rename_term(a, old, new) for a in formula.args))
    if isinstance(formula, Equals):
        return Equals(rename_term(formula.left, old, new),
                      rename_term(formula.right, old, new))
    if isinstance(formula, Not):
        return Not(rename_free(formula.sub, old, new))
    if isinstance(formula, BINARY):
        return type(formula)(rename_free(formula.left, old, new),
                             rename_free(formula.right, old, new))
    if isinstance(formula, QUANTIFIERS):
        if formula.var == old:
            return formula
        return type(formula)(formula.var, rename_free(formula.body, old, new))
    return formula


def freshen(formula):
    '''Rename quantifiers that rebind a variable already bound on their path.'''
    used = set(all_variables(formula))

    def walk(node, bound):
        if isinstance(node, QUANTIFIERS):
            var, body = node.var, node.body
            if var in bound:
                new = fresh_variable(var, used)
                used.add(new)
                body = rename_free(body, var, new)
                var = new
            return type(node)(var, walk(body, bound | frozenset([var])))
        if isinstance(node, Not):
            return Not(walk(node.sub, bound))
        if isinstance(node, BINARY):
            return type(node)(walk(node.left, bound), walk(node.right, bound))
        return node

    return walk(formula, frozenset())


def check_term(term, sig):
    if isinstance(term, Var):
        return
    if isinstance(term, Const):
        if sig.kind(term.name) != CONSTANT:
            raise UnknownSymbolError("Unknown constant: %s" % term.name)
        return
    if sig.kind(term.name) != FUNCTION:
        raise UnknownSymbolError("Unknown function symbol: %s" % term.name)
    if len(term.args) != sig.arity(term.name):
        raise ArityError("Function %s expects %d arguments, got %d" % (
            term.name, sig.arity(term.name), len(term.args)))
    for arg in term.args:
        check_term(arg, sig)


def check_formula(formula, sig):
    '''Raise unless every symbol is in sig with a matching arity.'''
    if isinstance(formula, Atom):
        if sig.kind(formula.name) != RELATION:
            raise UnknownSymbolError("Unknown relation symbol: %s" % formula.name)
        if len(formula.args) != sig.arity(formula.name):
            raise ArityError("Relation %s expects %d arguments, got %d" % (
                formula.name, sig.arity(formula.name), len(formula.args)))
        for arg in formula.args:
            check_term(arg, sig)
    elif isinstance(formula, Graph):
        kind = sig.kind(formula.name)
        if kind not in (FUNCTION, CONSTANT):
            raise UnknownSymbolError("Unknown function or constant: %s" % (
                formula.name))
        if len(formula.args) != sig.arity(formula.name) + 1:
            raise ArityError("Graph of %s expects %d arguments, got %d" % (
                formula.name, sig.arity(formula.name) + 1, len(formula.args)))
        for arg in formula.args:
            check_term(arg, sig)
    elif isinstance(formula, Equals):
        check_term(formula.left, sig)
        check_term(formula.right, sig)
    elif isinstance(formula, Not):
        check_formula(formula.sub, sig)
    elif isinstance(formula, BINARY):
        check_formula(formula.left, sig)
        check_formula(formula.right, sig)
    elif isinstance(formula, QUANTIFIERS):
        check_formula(formula.body, sig)
