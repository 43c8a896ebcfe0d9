"""Covers of a predicate's value by existentially closed local formulas."""

from dataclasses import dataclass, field
import logging

from bvquery.logic.printer import print_formula
from bvquery.predicates.predicate import predicate_variables
from bvquery.synthesis.local import local_formula
from bvquery.utils import popcount


@dataclass(frozen=True)
class CoverViolation(object):
    '''A formula whose value at eta leaves the predicate's value at eta.'''
    formula: str
    eta: tuple
    point: int

    def to_dict(self):
        return {"formula": self.formula, "eta": list(self.eta),
                "point": self.point}


@dataclass(frozen=True)
class EtaCover(object):
    eta0: tuple
    formulas: tuple = ()
    regions: tuple = ()
    violations: tuple = field(default_factory=tuple)

    def __iter__(self):
        return iter(zip(self.formulas, self.regions))

    def __len__(self):
        return len(self.formulas)


def _leaks(space, predicate, psi, variables):
    found = []
    for m, value in predicate.items():
        leak = space.evaluate(psi, m, variables) - value
        if leak:
            found.append(CoverViolation(print_formula(psi), m,
                                        leak.members()[0]))
    return found


def eta_cover(space, predicate, eta0, checked=None):
    '''
    Cover p(eta0) by the regions of local formulas, one per point not yet
    covered, and check each psi = ex x1 .. xk delta against p at every
    tuple. A psi already in checked (a set of printed formulas shared
    between covers) is not checked again.
    '''
    eta0 = tuple(eta0)
    predicate.check_space(space)
    variables = predicate_variables(predicate.arity)
    target = predicate(eta0)
    covered = space.empty()
    formulas, regions, violations = [], [], []
    for index in target:
        if index in covered:
            continue
        datum = local_formula(space, index, eta0, target)
        psi = datum.existential()
        covered = covered | datum.clopen
        formulas.append(psi)
        regions.append(datum.clopen)
        if checked is not None:
            text = print_formula(psi)
            if text in checked:
                continue
            checked.add(text)
        violations.extend(_leaks(space, predicate, psi, variables))
    logging.debug("cover at %r: %d formulas, %d violations" % (
        eta0, len(formulas), len(violations)))
    return EtaCover(eta0, tuple(formulas), tuple(regions), tuple(violations))


def collect_family(space, predicate):
    '''
    The covers at every tuple and their formulas, deduplicated by print.
    Each distinct psi is checked against p once, in the first cover that
    produces it.
    '''
    checked = set()
    covers = [eta_cover(space, predicate, m, checked)
              for m in predicate.tuples()]
    seen = set()
    family = []
    for cover in covers:
        for psi in cover.formulas:
            text = print_formula(psi)
            if text not in seen:
                seen.add(text)
                family.append(psi)
    return family, covers


def global_family(space, predicate):
    return collect_family(space, predicate)[0]


def greedy_cover(universe, candidates):
    '''
    Pick candidate bit sets until universe is covered: each round takes the
    candidate adding the most uncovered bits, the earliest on ties. Returns
    the chosen positions in pick order and the bits left uncovered.
    '''
    uncovered = universe
    chosen = []
    while uncovered:
        best, gain = None, 0
        for position, bits in enumerate(candidates):
            count = popcount(bits & uncovered)
            if count > gain:
                best, gain = position, count
        if best is None:
            break
        chosen.append(best)
        uncovered &= ~candidates[best]
        logging.debug("greedy pick %d covers %d" % (best, gain))
    return chosen, uncovered
