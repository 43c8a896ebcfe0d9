"""Synthesis of a defining formula for an invariant predicate.

The formulas covering p and those covering its complement together cover
every (point, tuple) pair. A greedy set cover over those pairs selects a
finite subfamily; the disjunction of the selected formulas for p is the
candidate definition, which is then checked at every tuple.
"""

from dataclasses import dataclass, field
import logging

from bvquery.exceptions import PredicateError
from bvquery.group.action import check_invariance
from bvquery.group.permutation import symmetric_generators
from bvquery.logic.printer import print_formula
from bvquery.logic.syntax import disjunction
from bvquery.predicates.predicate import (
    check_extensionality, formula_variables, predicate_complement,
    predicate_variables,
)
from bvquery.synthesis.cover import collect_family, greedy_cover


@dataclass(frozen=True)
class VerificationReport(object):
    verified: bool
    table: tuple = ()
    mismatch: tuple = ()
    point: int = -1

    def to_dict(self):
        out = {
            "verified": self.verified,
            "table": [{"tuple": list(m), "ok": ok} for m, ok in self.table],
        }
        if not self.verified:
            out.update(mismatch=list(self.mismatch), point=self.point)
        return out


def verify_definition(space, predicate, formula):
    '''Compare the value of formula with p at every tuple, least mismatch first.'''
    predicate.check_space(space)
    variables = formula_variables(formula, predicate.arity)
    table = []
    mismatch, point = (), -1
    for m, value in predicate.items():
        actual = space.evaluate(formula, m, variables)
        ok = actual == value
        table.append((m, ok))
        if not ok and not mismatch:
            difference = (actual - value) | (value - actual)
            mismatch, point = m, difference.members()[0]
    return VerificationReport(not mismatch, tuple(table), mismatch, point)


@dataclass(frozen=True)
class SynthesisResult(object):
    formula: object
    psi_family: tuple
    phi_family: tuple
    selected_psi: tuple
    selected_phi: tuple
    cover_complete: bool
    verification: VerificationReport
    violations: tuple = field(default_factory=tuple)

    @property
    def verified(self):
        return self.verification.verified

    @property
    def text(self):
        return print_formula(self.formula)

    def to_dict(self):
        return {
            "formula": self.text,
            "verified": self.verified,
            "cover_complete": self.cover_complete,
            "families": {
                "psi": [print_formula(f) for f in self.psi_family],
                "phi": [print_formula(f) for f in self.phi_family],
            },
            "family_sizes": {"psi": len(self.psi_family),
                             "phi": len(self.phi_family)},
            "selected": {"psi": list(self.selected_psi),
                         "phi": list(self.selected_phi)},
            "verification": self.verification.to_dict(),
            "violations": [v.to_dict() for v in self.violations],
        }


def _incidence(space, formulas, predicate):
    '''Bits over (tuple position * |X| + point) for each formula.'''
    variables = predicate_variables(predicate.arity)
    rows = []
    for formula in formulas:
        bits = 0
        for position, m in enumerate(predicate.tuples()):
            bits |= space.evaluate(formula, m, variables).bits << (
                position * space.size)
        rows.append(bits)
    return rows


def synthesize_definition(space, predicate):
    predicate.check_space(space)
    extensionality = check_extensionality(predicate)
    if not extensionality.extensional:
        raise PredicateError(
            "Predicate is not extensional: %r and %r at point %d" % (
                extensionality.left, extensionality.right,
                extensionality.point))
    if space.K > 1:
        invariance = check_invariance(space, predicate,
                                      symmetric_generators(space.K))
        if not invariance.invariant:
            raise PredicateError("Predicate is not invariant at %r" % (
                invariance.indices,))

    psi_family, psi_covers = collect_family(space, predicate)
    phi_family, phi_covers = collect_family(space,
                                            predicate_complement(predicate))
    violations = []
    for cover in psi_covers + phi_covers:
        violations.extend(cover.violations)

    total = space.size * len(predicate.tuples())
    candidates = (_incidence(space, psi_family, predicate) +
                  _incidence(space, phi_family, predicate))
    chosen, uncovered = greedy_cover((1 << total) - 1, candidates)
    selected_psi = sorted(c for c in chosen if c < len(psi_family))
    selected_phi = sorted(c - len(psi_family) for c in chosen
                          if c >= len(psi_family))
    formula = disjunction(psi_family[i] for i in selected_psi)
    verification = verify_definition(space, predicate, formula)
    logging.debug("synthesis: %d/%d psi, %d/%d phi, verified=%s" % (
        len(selected_psi), len(psi_family), len(selected_phi),
        len(phi_family), verification.verified))
    return SynthesisResult(formula, tuple(psi_family), tuple(phi_family),
                           tuple(selected_psi), tuple(selected_phi),
                           uncovered == 0, verification, tuple(violations))
