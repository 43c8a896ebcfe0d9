"""Theory files.

A theory file is line oriented:

    # graphs: irreflexive symmetric edge relation
    relation e 2
    axiom all x ~e(x, x)
    axiom all x all y (e(x, y) -> e(y, x))

Declarations may appear in any order; axioms are parsed once the whole
signature is known.
"""

from dataclasses import dataclass
import logging

from bvquery.exceptions import BVQueryException, TheoryFileError
from bvquery.logic.parser import parse_formula
from bvquery.logic.printer import print_formula
from bvquery.logic.syntax import Signature, free_variables


@dataclass(frozen=True)
class Theory(object):
    signature: Signature
    axioms: tuple = ()

    def to_dict(self):
        return {
            "signature": self.signature.to_dict(),
            "axioms": [print_formula(a) for a in self.axioms],
        }


def _arity(word, number):
    try:
        return int(word)
    except ValueError:
        raise TheoryFileError("Arity must be an integer, not %r" % word,
                              number)


def parse_theory(text):
    relations, functions, constants = [], [], []
    axiom_lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        keyword = words[0]
        if keyword == "relation" or keyword == "function":
            if len(words) != 3:
                raise TheoryFileError(
                    "Expected '%s <name> <arity>'" % keyword, number)
            entry = (words[1], _arity(words[2], number))
            (relations if keyword == "relation" else functions).append(entry)
        elif keyword == "constant":
            if len(words) != 2:
                raise TheoryFileError("Expected 'constant <name>'", number)
            constants.append(words[1])
        elif keyword == "axiom":
            body = line[len("axiom"):].strip()
            if not body:
                raise TheoryFileError("Empty axiom", number)
            axiom_lines.append((number, body))
        else:
            raise TheoryFileError("Unknown declaration: %s" % keyword, number)

    try:
        sig = Signature(tuple(relations), tuple(functions), tuple(constants))
    except BVQueryException as e:
        raise TheoryFileError(str(e))

    axioms = []
    for number, body in axiom_lines:
        try:
            axiom = parse_formula(body, sig)
        except BVQueryException as e:
            raise TheoryFileError(str(e), number)
        if free_variables(axiom):
            raise TheoryFileError("Axiom has free variables: %s" % ", ".join(
                free_variables(axiom)), number)
        axioms.append(axiom)
    logging.debug("theory: %d symbols, %d axioms" % (
        len(sig.names()), len(axioms)))
    return Theory(sig, tuple(axioms))


def load_theory(path):
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except (IOError, OSError) as e:
        raise TheoryFileError("Cannot read theory file %s: %s" % (path, e))
    return parse_theory(text)
