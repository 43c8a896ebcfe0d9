"""Check that a sentence has full value exactly when every model satisfies it."""

from dataclasses import dataclass, field

from bvquery.exceptions import UnassignedVariableError
from bvquery.logic.printer import print_formula
from bvquery.logic.syntax import free_variables
from bvquery.models.evaluate import evaluate_classical

HEADER = ("Provability is replaced by validity over the %d enumerated models "
          "of size at most %d; 'valid' means true in all of them.")


@dataclass(frozen=True)
class SentenceCheck(object):
    sentence: str
    valid: bool
    full: bool
    points: int

    @property
    def agrees(self):
        return self.valid == self.full

    def to_dict(self):
        return {
            "sentence": self.sentence,
            "valid": self.valid,
            "full": self.full,
            "points": self.points,
            "agrees": self.agrees,
        }


@dataclass(frozen=True)
class ConservativityReport(object):
    header: str
    space_size: int
    checks: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return all(c.agrees for c in self.checks)

    def defects(self):
        return [c for c in self.checks if not c.agrees]

    def to_dict(self):
        return {
            "header": self.header,
            "space_size": self.space_size,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


def conservativity_report(space, sentences):
    checks = []
    for sentence in sentences:
        if free_variables(sentence):
            raise UnassignedVariableError("Not a sentence: %s" % (
                print_formula(sentence)))
        valid = all(evaluate_classical(m, sentence, {})
                    for m in space.model_class)
        value = space.evaluate(sentence, ())
        checks.append(SentenceCheck(print_formula(sentence), valid,
                                    value.is_full(), len(value)))
    header = HEADER % (len(space.model_class), space.model_class.max_size)
    return ConservativityReport(header, space.size, tuple(checks))
