"""ASCII printer for formulas.

The printed text is the canonical key for caches and deduplication, so the
printer is deterministic and emits only the parentheses the grammar needs:
a quantifier extends as far right as possible, so a quantified formula is
bracketed whenever something follows it.
"""

from bvquery.logic.syntax import (
    And, Apply, Atom, Bottom, Const, Equals, Exists, Forall, Graph, Iff,
    Implies, Not, Or, Top, Var, BINARY, QUANTIFIERS,
)

IFF, IMPLIES, OR, AND, NOT, ATOM = 1, 2, 3, 4, 5, 6

OPERATORS = {
    Iff: (IFF, "<->"),
    Implies: (IMPLIES, "->"),
    Or: (OR, "|"),
    And: (AND, "&"),
}


def print_term(term):
    if isinstance(term, (Var, Const)):
        return term.name
    if isinstance(term, Apply):
        return "%s(%s)" % (term.name, ", ".join(print_term(a) for a in term.args))
    raise TypeError("Not a term: %r" % (term,))


def precedence(formula):
    if isinstance(formula, QUANTIFIERS):
        return 0
    if isinstance(formula, BINARY):
        return OPERATORS[type(formula)][0]
    if isinstance(formula, Not) and not isinstance(formula.sub, Equals):
        return NOT
    return ATOM


def _paren(text):
    return "(" + text + ")"


def _show(formula, closed):
    if isinstance(formula, QUANTIFIERS):
        keyword = "all" if isinstance(formula, Forall) else "ex"
        body = _show(formula.body, False)
        if isinstance(formula.body, BINARY):
            body = _paren(body)
        text = "%s %s %s" % (keyword, formula.var, body)
        return _paren(text) if closed else text
    if isinstance(formula, Atom) or isinstance(formula, Graph):
        return "%s(%s)" % (formula.name,
                           ", ".join(print_term(a) for a in formula.args))
    if isinstance(formula, Equals):
        return "%s = %s" % (print_term(formula.left), print_term(formula.right))
    if isinstance(formula, Top):
        return "true"
    if isinstance(formula, Bottom):
        return "false"
    if isinstance(formula, Not):
        sub = formula.sub
        if isinstance(sub, Equals):
            return "%s != %s" % (print_term(sub.left), print_term(sub.right))
        if precedence(sub) < NOT:
            return "~" + _paren(_show(sub, False))
        return "~" + _show(sub, closed)
    if isinstance(formula, BINARY):
        level, symbol = OPERATORS[type(formula)]
        left, right = formula.left, formula.right

        # Left operands are followed by the operator, so must be closed.
        if precedence(left) < level or (
                precedence(left) == level and isinstance(formula, Implies)):
            left_text = _paren(_show(left, False))
        else:
            left_text = _show(left, True)

        if isinstance(right, QUANTIFIERS):
            right_text = _show(right, closed)
        elif precedence(right) < level or (
                precedence(right) == level and not isinstance(formula, Implies)):
            right_text = _paren(_show(right, False))
        else:
            right_text = _show(right, closed)
        return "%s %s %s" % (left_text, symbol, right_text)
    raise TypeError("Not a formula: %r" % (formula,))


def print_formula(formula):
    return _show(formula, False)
