"""Parser for the ASCII formula syntax.

Precedence, loosest first: <->, ->, |, &, ~. The arrow is right
associative, the others associate to the left. `all v` / `ex v` take the
longest formula to their right. Every level exists in an open form (which may
end in an unbracketed quantifier) and a closed form (which may not); only
open forms appear as the last operand, which keeps the grammar LALR(1).
"""

import logging

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from bvquery.exceptions import (
    ArityError, FormulaSyntaxError, UnknownSymbolError,
)
from bvquery.logic.syntax import (
    And, Apply, Atom, Bottom, Const, Equals, Exists, Forall, Graph, Iff,
    Implies, Not, Or, Top, Var, CONSTANT, FUNCTION, RELATION,
    check_formula, freshen,
)

GRAMMAR = r"""
?start: f_iff

?f_iff: f_imp
      | c_iff "<->" f_imp      -> iff
?c_iff: c_imp
      | c_iff "<->" c_imp      -> iff

?f_imp: f_or
      | c_or "->" f_imp        -> implies
?c_imp: c_or
      | c_or "->" c_imp        -> implies

?f_or: f_and
     | c_or "|" f_and          -> disj
?c_or: c_and
     | c_or "|" c_and          -> disj

?f_and: f_not
      | c_and "&" f_not        -> conj
?c_and: c_not
      | c_and "&" c_not        -> conj

?f_not: c_atom
      | "~" f_not              -> neg
      | "all" NAME f_iff       -> forall
      | "ex" NAME f_iff        -> exists
?c_not: c_atom
      | "~" c_not              -> neg

?c_atom: "(" f_iff ")"
       | "true"                -> top
       | "false"               -> bottom
       | NAME "(" terms ")"    -> application
       | term "=" term         -> equals
       | term "!=" term        -> not_equals

terms: term ("," term)*

term: NAME                     -> name_term
    | NAME "(" terms ")"       -> apply_term

NAME: /[a-zA-Z][a-zA-Z0-9_]*/

%import common.WS
%ignore WS
"""

PARSER = Lark(GRAMMAR, parser="lalr", start="start", propagate_positions=False)


class FormulaBuilder(Transformer):

    """
    Turn a parse tree into formula objects, resolving every name against
    the signature.
    """

    def __init__(self, sig):
        super(FormulaBuilder, self).__init__()
        self.sig = sig

    def terms(self, children):
        return tuple(children)

    def name_term(self, children):
        name = str(children[0])
        kind = self.sig.kind(name)
        if kind == CONSTANT:
            return Const(name)
        if kind is not None:
            raise ArityError("Symbol %s (%s) used without arguments" % (
                name, kind))
        return Var(name)

    def apply_term(self, children):
        name, args = str(children[0]), children[1]
        kind = self.sig.kind(name)
        if kind is None:
            raise UnknownSymbolError("Unknown function symbol: %s" % name)
        if kind != FUNCTION:
            raise ArityError("Symbol %s (%s) cannot be applied as a term" % (
                name, kind))
        if len(args) != self.sig.arity(name):
            raise ArityError("Function %s expects %d arguments, got %d" % (
                name, self.sig.arity(name), len(args)))
        return Apply(name, args)

    def application(self, children):
        name, args = str(children[0]), children[1]
        kind = self.sig.kind(name)
        if kind is None:
            raise UnknownSymbolError("Unknown relation symbol: %s" % name)
        if kind == RELATION:
            if len(args) != self.sig.arity(name):
                raise ArityError("Relation %s expects %d arguments, got %d" % (
                    name, self.sig.arity(name), len(args)))
            return Atom(name, args)
        # A function or constant applied to one extra argument is its graph.
        if len(args) != self.sig.arity(name) + 1:
            raise ArityError("Graph of %s expects %d arguments, got %d" % (
                name, self.sig.arity(name) + 1, len(args)))
        return Graph(name, args)

    def equals(self, children):
        return Equals(children[0], children[1])

    def not_equals(self, children):
        return Not(Equals(children[0], children[1]))

    def top(self, children):
        return Top()

    def bottom(self, children):
        return Bottom()

    def neg(self, children):
        return Not(children[0])

    def conj(self, children):
        return And(children[0], children[1])

    def disj(self, children):
        return Or(children[0], children[1])

    def implies(self, children):
        return Implies(children[0], children[1])

    def iff(self, children):
        return Iff(children[0], children[1])

    def forall(self, children):
        return Forall(str(children[0]), children[1])

    def exists(self, children):
        return Exists(str(children[0]), children[1])


def parse_formula(text, sig):
    '''Parse formula text over sig; bound variables are freshened.'''
    try:
        tree = PARSER.parse(text)
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        if isinstance(e, UnexpectedEOF) or (
                getattr(token, "type", None) == "$END"):
            # The end token borrows the last token's position.
            position = len(text)
            line = text.count("\n") + 1
            column = len(text) - text.rfind("\n")
        else:
            position = getattr(e, "pos_in_stream", None) or 0
            line = getattr(e, "line", 1) or 1
            column = getattr(e, "column", 1) or 1
        raise FormulaSyntaxError("Cannot parse formula %r" % text,
                                 text=text, position=position,
                                 line=line, column=column)
    try:
        formula = FormulaBuilder(sig).transform(tree)
    except VisitError as e:
        raise e.orig_exc
    formula = freshen(formula)
    check_formula(formula, sig)
    logging.debug("parsed formula: %s" % text)
    return formula
