from bvquery.exceptions import UnassignedVariableError
from bvquery.logic.syntax import (
    And, Apply, Atom, Bottom, Const, Equals, Exists, Forall, Graph, Iff,
    Implies, Not, Or, Top, Var,
)


def evaluate_term(structure, term, assignment):
    if isinstance(term, Var):
        if term.name not in assignment:
            raise UnassignedVariableError(
                "Variable %s has no value" % term.name)
        return assignment[term.name]
    if isinstance(term, Const):
        return structure.constant(term.name)
    if isinstance(term, Apply):
        return structure.function_value(
            term.name, [evaluate_term(structure, a, assignment)
                        for a in term.args])
    raise TypeError("Not a term: %r" % (term,))


def evaluate_classical(structure, formula, assignment=None):
    '''Tarskian truth of formula in structure under assignment.'''
    assignment = assignment or {}
    if isinstance(formula, Atom):
        args = tuple(evaluate_term(structure, a, assignment)
                     for a in formula.args)
        return args in structure.relation(formula.name)
    if isinstance(formula, Graph):
        values = [evaluate_term(structure, a, assignment)
                  for a in formula.args]
        if formula.name in structure.signature.constants:
            return structure.constant(formula.name) == values[0]
        return structure.function_value(formula.name, values[:-1]) == values[-1]
    if isinstance(formula, Equals):
        return (evaluate_term(structure, formula.left, assignment) ==
                evaluate_term(structure, formula.right, assignment))
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not evaluate_classical(structure, formula.sub, assignment)
    if isinstance(formula, And):
        return (evaluate_classical(structure, formula.left, assignment) and
                evaluate_classical(structure, formula.right, assignment))
    if isinstance(formula, Or):
        return (evaluate_classical(structure, formula.left, assignment) or
                evaluate_classical(structure, formula.right, assignment))
    if isinstance(formula, Implies):
        return (not evaluate_classical(structure, formula.left, assignment) or
                evaluate_classical(structure, formula.right, assignment))
    if isinstance(formula, Iff):
        return (evaluate_classical(structure, formula.left, assignment) ==
                evaluate_classical(structure, formula.right, assignment))
    if isinstance(formula, Exists):
        return any(
            evaluate_classical(structure, formula.body,
                               dict(assignment, **{formula.var: a}))
            for a in range(structure.size))
    if isinstance(formula, Forall):
        return all(
            evaluate_classical(structure, formula.body,
                               dict(assignment, **{formula.var: a}))
            for a in range(structure.size))
    raise TypeError("Not a formula: %r" % (formula,))
