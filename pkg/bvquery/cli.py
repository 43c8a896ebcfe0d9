#!/usr/bin/env python

"""Command line front end.

    bvquery models --theory unary.fol --max-size 2
    bvquery eval --theory unary.fol --K 4 --formula "r(x1)" --xi 0
    bvquery synthesize --theory unary.fol --K 4 --predicate p.json

Exit codes: 0 success, 1 usage or domain error, 2 a check or verification
that ran and failed.
"""

import argparse
import logging
import sys

from bvquery.config import DEFAULT_CONFIG, build_config
from bvquery.exceptions import BVQueryException, ConfigError, UsageError
from bvquery.group.action import check_invariance
from bvquery.group.permutation import random_permutations, symmetric_generators
from bvquery.logic.parser import parse_formula
from bvquery.logic.printer import print_formula
from bvquery.logic.theory import load_theory
from bvquery.models.enumerate import enumerate_models
from bvquery.predicates.atoms import invariant_atoms, predicate_from_atoms
from bvquery.predicates.exchange import load_predicate, predicate_to_dict
from bvquery.predicates.predicate import (
    check_extensionality, formula_arity, predicate_from_formula,
)
from bvquery.space.conservativity import conservativity_report
from bvquery.space.space import Space
from bvquery.synthesis.synthesize import (
    synthesize_definition, verify_definition,
)
from bvquery.utils import dumps_json, green, lightred, red, render, status

# the log format for the logging module
LOG_FORMAT = "%(levelname)s [Line %(lineno)d]: %(message)s"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2


class CommandParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_indices(text):
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(int(w) for w in text.split(","))
    except ValueError:
        raise UsageError("Expected comma separated indices, not %r" % text)


def make_parser():
    common = CommandParser(add_help=False)
    group = common.add_argument_group("Space options")
    group.add_argument("--theory", help="Path to a theory file")
    group.add_argument("--max-size", dest="max_size", type=int, default=None,
                       help="Largest model size to enumerate (default %d)" %
                       DEFAULT_CONFIG["options"]["max_size"])
    group.add_argument("--K", dest="K", type=int, default=None,
                       help="Number of indices (default 2*lcm(1..max-size))")
    group.add_argument("--mode", choices=("balanced", "unbalanced"),
                       default=None, help="Fibre discipline of enumerations")
    group.add_argument("--candidate-cap", dest="candidate_cap", type=int,
                       default=None, help="Refuse larger model searches")
    group.add_argument("--atom-cap", dest="atom_cap", type=int, default=None,
                       help="Refuse larger atom computations")

    group = common.add_argument_group("Run options")
    group.add_argument("--config", default=None,
                       help="JSON file whose \"options\" set defaults")
    group.add_argument("--out", default=None,
                       help="Write the result here instead of stdout")
    group.add_argument("--format", choices=("json", "text"), default=None)
    group.add_argument("--seed", type=int, default=None,
                       help="Seed for sampled permutation checks")
    group.add_argument("--debug", default=False, action="store_true",
                       help="Output debug messages")

    parser = CommandParser(
        prog="bvquery",
        description="Finite Boolean-valued models of first order theories.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    sub.add_parser("models", parents=[common],
                   help="List the enumerated model class")
    sub.add_parser("space", parents=[common],
                   help="Export the points of the space")

    cmd = sub.add_parser("eval", parents=[common],
                         help="Evaluate a formula at a tuple of indices")
    cmd.add_argument("--formula", required=True)
    cmd.add_argument("--xi", default="",
                     help="Comma separated indices for x1, x2, ...")

    for name, text in (("invariance", "Check extensionality and invariance"),
                       ("synthesize", "Synthesize a defining formula")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("--predicate", help="Predicate JSON file")
        cmd.add_argument("--formula",
                         help="Use the predicate defined by this formula")
        cmd.add_argument("--arity", type=int, default=None)
        if name == "invariance":
            cmd.add_argument("--samples", type=int, default=0,
                             help="Also check this many random permutations")

    cmd = sub.add_parser("atoms", parents=[common],
                         help="Compute invariant atoms")
    cmd.add_argument("--arity", type=int, default=1)
    cmd.add_argument("--union", default=None,
                     help="Emit the predicate for these atom indices")

    cmd = sub.add_parser("verify", parents=[common],
                         help="Check a formula against a predicate")
    cmd.add_argument("--predicate", help="Predicate JSON file")
    cmd.add_argument("--target", help="Predicate given by a formula")
    cmd.add_argument("--arity", type=int, default=None)
    cmd.add_argument("--formula", required=True, help="Candidate definition")

    cmd = sub.add_parser("conservativity", parents=[common],
                         help="Compare validity with full truth value")
    cmd.add_argument("--sentences", help="File with one sentence per line")
    cmd.add_argument("--formula", action="append", default=[],
                     help="A sentence (repeatable)")
    return parser


class Session(object):

    '''Lazily built theory, model class and space for one run.'''

    def __init__(self, config):
        self.config = config
        self._theory = None
        self._models = None
        self._space = None

    @property
    def theory(self):
        if self._theory is None:
            if not self.config.theory:
                raise ConfigError("--theory is required")
            self._theory = load_theory(self.config.theory)
        return self._theory

    @property
    def models(self):
        if self._models is None:
            self._models = enumerate_models(self.theory, self.config.max_size,
                                            self.config.candidate_cap)
            logging.debug("%d models" % len(self._models))
        return self._models

    @property
    def space(self):
        if self._space is None:
            self._space = Space(self.models, self.config.K, self.config.mode)
            logging.debug("%d points" % self._space.size)
        return self._space

    def formula(self, text):
        return parse_formula(text, self.theory.signature)

    def predicate(self, path, text, arity):
        if path and text:
            raise UsageError("Give either a predicate file or a formula")
        if path:
            predicate = load_predicate(self.space, path)
            if arity is not None and arity != predicate.arity:
                raise UsageError("--arity %d does not match the file" % arity)
            return predicate
        if not text:
            raise UsageError("A predicate file or a formula is required")
        formula = self.formula(text)
        if arity is None:
            arity = formula_arity(formula)
        return predicate_from_formula(self.space, formula, arity)


def cmd_models(session, args):
    return EXIT_OK, session.models.to_dict(), "models"


def cmd_space(session, args):
    space = session.space
    data = dict(space.to_dict(), size=space.size,
                space_hash=space.space_hash())
    return EXIT_OK, data, "space"


def cmd_eval(session, args):
    formula = session.formula(args.formula)
    xi = parse_indices(args.xi)
    value = session.space.evaluate(formula, xi)
    return EXIT_OK, {
        "formula": print_formula(formula),
        "xi": list(xi),
        "points": value.members(),
        "size": len(value),
        "space_size": session.space.size,
    }, "eval"


def cmd_invariance(session, args):
    space = session.space
    predicate = session.predicate(args.predicate, args.formula, args.arity)
    extensional = check_extensionality(predicate)
    generators = symmetric_generators(space.K) if space.K > 1 else []
    invariant = check_invariance(space, predicate, generators)
    data = {
        "arity": predicate.arity,
        "extensionality": extensional.to_dict(),
        "invariance": dict(invariant.to_dict(), generators=[
            g.to_cycles() for g in generators]),
    }
    ok = extensional.extensional and invariant.invariant
    if args.samples:
        sampled = random_permutations(space.K, args.samples,
                                      session.config.seed)
        report = check_invariance(space, predicate, sampled)
        data["sampled"] = dict(report.to_dict(), count=args.samples,
                               seed=session.config.seed)
        if not report.invariant:
            data["sampled"]["cycles"] = sampled[report.permutation].to_cycles()
        ok = ok and report.invariant
    return (EXIT_OK if ok else EXIT_FAILED), data, "invariance"


def cmd_atoms(session, args):
    space = session.space
    atoms = invariant_atoms(space, args.arity, session.config.atom_cap)
    if args.union is not None:
        chosen = parse_indices(args.union)
        for index in chosen:
            if not 0 <= index < len(atoms):
                raise UsageError("No atom %d (there are %d)" % (
                    index, len(atoms)))
        predicate = predicate_from_atoms(space, [atoms[i] for i in chosen],
                                         args.arity)
        return EXIT_OK, predicate_to_dict(predicate), None
    return EXIT_OK, {
        "arity": args.arity,
        "count": len(atoms),
        "atoms": [a.to_dict() for a in atoms],
    }, "atoms"


def cmd_synthesize(session, args):
    space = session.space
    predicate = session.predicate(args.predicate, args.formula, args.arity)
    result = synthesize_definition(space, predicate)
    data = dict(result.to_dict(), arity=predicate.arity,
                space_hash=space.space_hash())
    return (EXIT_OK if result.verified else EXIT_FAILED), data, "synthesis"


def cmd_verify(session, args):
    space = session.space
    predicate = session.predicate(args.predicate, args.target, args.arity)
    formula = session.formula(args.formula)
    report = verify_definition(space, predicate, formula)
    data = dict(report.to_dict(), formula=print_formula(formula))
    return (EXIT_OK if report.verified else EXIT_FAILED), data, "verify"


def read_sentences(path):
    try:
        with open(path, "r") as fh:
            lines = fh.read().splitlines()
    except (IOError, OSError) as e:
        raise ConfigError("Cannot read sentences file %s: %s" % (path, e))
    return [line.strip() for line in lines
            if line.strip() and not line.strip().startswith("#")]


def cmd_conservativity(session, args):
    texts = list(args.formula)
    if args.sentences:
        texts.extend(read_sentences(args.sentences))
    if texts:
        sentences = [session.formula(t) for t in texts]
    else:
        sentences = list(session.theory.axioms)
    report = conservativity_report(session.space, sentences)
    return (EXIT_OK if report.ok else EXIT_FAILED), report.to_dict(), \
        "conservativity"


HANDLERS = {
    "models": cmd_models,
    "space": cmd_space,
    "eval": cmd_eval,
    "invariance": cmd_invariance,
    "atoms": cmd_atoms,
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "conservativity": cmd_conservativity,
}


def emit(config, data, template):
    if config.format == "text" and template is not None:
        content = render(template, data=data)
    else:
        content = dumps_json(data)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(content)
    else:
        sys.stdout.write(content)


def run(argv):
    '''Run one command; returns the exit code.'''
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        status("error: %s" % e)
        return EXIT_ERROR
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    if args.debug:
        logging.basicConfig(format=LOG_FORMAT, level=logging.DEBUG)
    else:
        logging.basicConfig(format=LOG_FORMAT, level=logging.INFO)

    flags = {
        "theory": args.theory,
        "max_size": args.max_size,
        "K": args.K,
        "mode": args.mode,
        "candidate_cap": args.candidate_cap,
        "atom_cap": args.atom_cap,
        "seed": args.seed,
        "out": args.out,
        "format": args.format,
    }
    try:
        config = build_config(args.command, flags, args.config, vars(args))
        session = Session(config)
        code, data, template = HANDLERS[args.command](session, args)
        emit(config, data, template)
    except BVQueryException as e:
        logging.error("%s: %s" % (e.__class__.__name__, e))
        status("%s: ERROR" % args.command, lightred)
        return EXIT_ERROR

    if code == EXIT_OK:
        status("%s: PASSED" % args.command, green)
    else:
        status("%s: FAILED" % args.command, red)
    return code


def main(argc, argv):
    return run(argv[1:])


if __name__ == "__main__":
    sys.exit(main(len(sys.argv), sys.argv))
