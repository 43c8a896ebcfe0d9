#!/usr/bin/env python

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import itertools
import random
import unittest

import test_base

from bvquery.exceptions import (
    FibreExhaustedError, IndexRangeError, PatternMismatchError,
    PredicateError,
)
from bvquery.group.action import apply_permutation
from bvquery.logic.parser import parse_formula
from bvquery.logic.printer import print_formula
from bvquery.logic.syntax import Top
from bvquery.models.evaluate import evaluate_classical
from bvquery.predicates.atoms import invariant_atoms, predicate_from_atoms
from bvquery.predicates.predicate import (
    Predicate, check_extensionality, fibre_size_predicate,
    predicate_from_formula,
)
from bvquery.synthesis.cover import (
    collect_family, eta_cover, global_family, greedy_cover,
)
from bvquery.synthesis.local import (
    align_targets, eq_alpha_formula, induced_permutation, local_formula,
    zeta_witness,
)
from bvquery.synthesis.synthesize import (
    synthesize_definition, verify_definition,
)


def e1():
    space = test_base.e1_space()
    return space, space.model_class.theory.signature


def formula_predicate(space, text, arity=1):
    sig = space.model_class.theory.signature
    return predicate_from_formula(space, parse_formula(text, sig), arity)


def atom_unions(space, count, seed, arity=1):
    atoms = invariant_atoms(space, arity)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        chosen = [a for a in atoms if rng.random() < 0.5]
        out.append(predicate_from_atoms(space, chosen, arity))
    return out


class EqAlphaTests(unittest.TestCase):
    def test_examples(self):
        f = eq_alpha_formula((0, 0, 1, 1), (0, 1, 2), (3,))
        self.assertEqual(print_formula(f), "x1 = x2 & x3 = y")
        self.assertEqual(eq_alpha_formula((0, 0, 1, 1), (0,), (2,)), Top())
        f = eq_alpha_formula((0, 0, 0, 0), (0, 1), (2,))
        self.assertEqual(print_formula(f), "x1 = x2 & x1 = y & x2 = y")

    def test_tuple_targets(self):
        f = eq_alpha_formula((0, 1, 0, 1), (0, 1), (2, 3))
        self.assertEqual(print_formula(f), "x1 = y1 & x2 = y2")

    def test_range(self):
        with self.assertRaises(IndexRangeError):
            eq_alpha_formula((0, 0, 1, 1), (0, 4), (1,))


class ZetaTests(unittest.TestCase):
    def test_example(self):
        self.assertEqual(zeta_witness((0, 0, 1, 1), (0, 1), (2,), (0, 2), (3,)),
                         (0, 3))

    def test_forced(self):
        self.assertEqual(zeta_witness((0, 1, 0, 1), (1, 0), (3,), (3, 0), (3,)),
                         (3, 0))

    def test_exhausted(self):
        with self.assertRaises(FibreExhaustedError) as ctx:
            zeta_witness((0, 0, 1, 1), (1, 1), (2,), (0, 1), (3,))
        self.assertEqual(ctx.exception.element, 1)

    def test_mismatch(self):
        with self.assertRaises(PatternMismatchError):
            zeta_witness((0, 0, 1, 1), (0,), (2, 2), (0,), (1, 3))
        with self.assertRaises(PatternMismatchError):
            zeta_witness((0, 0, 1, 1), (0,), (2,), (3,), (3,))

    def test_oracle(self):
        '''The witness is the least valid tuple among all candidates.'''
        beta, b, eta, xi, eta0 = (0, 0, 1, 1), (0, 1), (2,), (0, 2), (3,)
        valid = []
        for zeta in itertools.product(range(4), repeat=2):
            if tuple(beta[k] for k in zeta) != b:
                continue
            left, right = zeta + eta, xi + eta0
            if all((left[s] == left[t]) == (right[s] == right[t])
                   for s in range(3) for t in range(3)):
                valid.append(zeta)
        self.assertEqual(zeta_witness(beta, b, eta, xi, eta0), min(valid))

    def test_induced_permutation(self):
        p = induced_permutation((0, 3), (2,), (0, 2), (3,), 4)
        self.assertEqual(p(2), 3)
        self.assertEqual(p.apply_tuple((0, 3)), (0, 2))
        self.assertEqual(p.images, (0, 1, 3, 2))
        with self.assertRaises(PatternMismatchError):
            induced_permutation((1, 1), (2,), (0, 1), (3,), 4)

    def test_align_targets(self):
        self.assertEqual(align_targets((0, 0, 1, 1), (0, 1), (2, 3)), (0, 1))
        self.assertEqual(align_targets((0, 0, 1, 1), (0, 0), (2, 3)), (0, 1))
        self.assertEqual(align_targets((0, 0, 1, 1), (1, 0), (2, 2)), (1, 1))
        with self.assertRaises(PatternMismatchError):
            align_targets((0, 0, 1, 1), (0, 2), (3, 3))


class LocalFormulaTests(unittest.TestCase):
    def setUp(self):
        self.space, self.sig = e1()
        self.p = formula_predicate(self.space, "r(y)")

    def test_example(self):
        index = self.space.point_index(3, (0, 0, 1, 1))
        self.assertEqual(index, 5)
        datum = local_formula(self.space, index, (3,), self.p(3))
        self.assertEqual(datum.xi, (0, 2))
        self.assertEqual(
            print_formula(datum.formula),
            "~r(x1) & r(x2) & x1 != x2 & (all y1 (y1 = x1 | y1 = x2)) & "
            "x2 = y")
        self.assertEqual(datum.clopen.members(), [index])
        self.assertEqual(print_formula(datum.existential()),
                         "ex x1 ex x2 (" + print_formula(datum.formula) + ")")

    def test_singleton_region(self):
        for index in range(self.space.size):
            region = self.space.clopen([index])
            datum = local_formula(self.space, index, (1,), region)
            self.assertEqual(datum.clopen, region)

    def test_full_region(self):
        # Point 7 enumerates (0, 1, 1, 0): one index per fibre suffices.
        datum = local_formula(self.space, 7, (0,), self.space.full())
        self.assertEqual(self.space.points[7].enumeration, (0, 1, 1, 0))
        self.assertEqual(datum.xi, (0, 1))
        self.assertIn(7, datum.clopen)

    def test_outside_region(self):
        with self.assertRaises(PredicateError):
            local_formula(self.space, 0, (0,), self.p(0))

    def check_local_data(self, p):
        '''Containment and transport for every (point, eta0) pair.'''
        space = self.space
        K = space.K
        for eta0 in itertools.product(range(K), repeat=p.arity):
            region = p(eta0)
            for index in region:
                datum = local_formula(space, index, eta0, region)
                self.assertIn(index, datum.clopen)
                self.assertTrue(datum.clopen <= region)
                value = datum.clopen
                names = datum.variables + datum.targets
                for eta in itertools.product(range(K), repeat=p.arity):
                    psi_value = space.evaluate(datum.existential(), eta,
                                               datum.targets)
                    self.assertTrue(psi_value <= p(eta))
                    for y in psi_value:
                        self.check_transport(datum, y, eta, value, names)

    def check_transport(self, datum, y, eta, value, names):
        space = self.space
        point = space.points[y]
        model = space.model(point.model)
        beta = point.enumeration
        eta_star = align_targets(beta, eta, datum.eta0)
        c = tuple(beta[k] for k in eta_star)
        for b in itertools.product(range(model.size), repeat=len(datum.xi)):
            if not evaluate_classical(model, datum.formula,
                                      dict(zip(names, b + c))):
                continue
            zeta = zeta_witness(beta, b, eta_star, datum.xi, datum.eta0)
            pi = induced_permutation(zeta, eta_star, datum.xi, datum.eta0,
                                     space.K)
            self.assertEqual(pi.apply_tuple(eta_star), datum.eta0)
            self.assertIn(apply_permutation(space, pi, y), value)
            return
        self.fail("no witness for point %d at %r" % (y, eta))

    def test_local_data_for_formula(self):
        self.check_local_data(self.p)

    def test_local_data_for_atom_unions(self):
        for p in atom_unions(self.space, 3, seed=17):
            self.check_local_data(p)

    def test_local_data_for_binary_predicate(self):
        self.check_local_data(atom_unions(self.space, 1, seed=5, arity=2)[0])


class CoverTests(unittest.TestCase):
    def setUp(self):
        self.space, self.sig = e1()
        self.p = formula_predicate(self.space, "r(y)")

    def test_cover(self):
        for eta0 in range(4):
            cover = eta_cover(self.space, self.p, (eta0,))
            union = self.space.empty()
            psi_union = self.space.empty()
            for psi, region in cover:
                self.assertTrue(region <= self.space.evaluate(
                    psi, (eta0,), ["y"]))
                union = union | region
                psi_union = psi_union | self.space.evaluate(psi, (eta0,),
                                                            ["y"])
            self.assertEqual(union, self.p(eta0))
            self.assertEqual(psi_union, self.p(eta0))
            self.assertEqual(cover.violations, ())

    def test_empty_predicate(self):
        empty = Predicate.constant(self.space, 1, self.space.empty())
        self.assertEqual(global_family(self.space, empty), [])
        result = synthesize_definition(self.space, empty)
        self.assertTrue(result.verified)
        self.assertEqual(result.text, "false")

    def test_global_family(self):
        for p in [self.p] + atom_unions(self.space, 3, seed=29):
            family = global_family(self.space, p)
            texts = [print_formula(f) for f in family]
            self.assertEqual(len(texts), len(set(texts)))
            for eta in range(4):
                union = self.space.empty()
                for psi in family:
                    union = union | self.space.evaluate(psi, (eta,), ["y"])
                self.assertEqual(union, p(eta))

    def test_violations_for_non_invariant(self):
        table = list(self.p.table)
        table[0] = table[0] - self.space.clopen([1])
        broken = Predicate(self.space, 1, table)
        family, covers = collect_family(self.space, broken)
        found = [(v.eta, v.point) for c in covers for v in c.violations]
        self.assertIn(((0,), 1), found)
        with self.assertRaises(PredicateError):
            synthesize_definition(self.space, broken)

    def test_each_formula_checked_once(self):
        table = list(self.p.table)
        table[0] = table[0] - self.space.clopen([1])
        broken = Predicate(self.space, 1, table)
        cover = eta_cover(self.space, broken, (1,))
        self.assertIn(((0,), 1), [(v.eta, v.point) for v in cover.violations])
        seen = set(print_formula(psi) for psi in cover.formulas)
        again = eta_cover(self.space, broken, (1,), checked=seen)
        self.assertEqual(again.formulas, cover.formulas)
        self.assertEqual(again.violations, ())
        family, covers = collect_family(self.space, broken)
        reported = [(v.formula, v.eta) for c in covers for v in c.violations]
        self.assertEqual(len(reported), len(set(reported)))
        self.assertTrue(reported)

    def test_greedy(self):
        self.assertEqual(greedy_cover(0b1111, [0b0011, 0b0110, 0b1100]),
                         ([0, 2], 0))
        self.assertEqual(greedy_cover(0b10011, [0b0011, 0b0001]),
                         ([0], 0b10000))
        self.assertEqual(greedy_cover(0, [0b1]), ([], 0))


class SynthesisTests(unittest.TestCase):
    def setUp(self):
        self.space, self.sig = e1()

    def test_unary_relation(self):
        p = formula_predicate(self.space, "r(y)")
        result = synthesize_definition(self.space, p)
        self.assertTrue(result.verified)
        self.assertTrue(result.cover_complete)
        self.assertTrue(verify_definition(self.space, p,
                                          result.formula).verified)
        data = result.to_dict()
        self.assertEqual(data["formula"], result.text)
        self.assertEqual(data["family_sizes"]["psi"], len(result.psi_family))
        self.assertEqual(len(data["verification"]["table"]), 4)

    def test_size_or_relation(self):
        table = []
        for eta in range(4):
            bits = []
            for i, point in enumerate(self.space.points):
                model = self.space.model(point.model)
                if model.size == 1 or (point.enumeration[eta],) in \
                        model.relation("r"):
                    bits.append(i)
            table.append(self.space.clopen(bits))
        p = Predicate(self.space, 1, table)
        hand = parse_formula("r(y) | all x all z x = z", self.sig)
        self.assertTrue(verify_definition(self.space, p, hand).verified)
        result = synthesize_definition(self.space, p)
        self.assertTrue(result.verified)

    def test_verify(self):
        p = formula_predicate(self.space, "r(y)")
        ok = verify_definition(self.space, p, parse_formula("r(y)", self.sig))
        self.assertTrue(ok.verified)
        bad = verify_definition(self.space, p,
                                parse_formula("~r(y)", self.sig))
        self.assertFalse(bad.verified)
        self.assertEqual((bad.mismatch, bad.point), ((0,), 0))
        self.assertEqual(bad.to_dict()["mismatch"], [0])
        with self.assertRaises(PredicateError):
            verify_definition(self.space, p, parse_formula("r(x)", self.sig))

    def test_refuses_non_extensional(self):
        table = [self.space.full()] + [self.space.empty()] * 3
        with self.assertRaises(PredicateError):
            synthesize_definition(self.space, Predicate(self.space, 1, table))

    def test_negative_control(self):
        space = test_base.e1_space("unbalanced")
        q = fibre_size_predicate(space)
        self.assertTrue(check_extensionality(q).extensional)
        result = synthesize_definition(space, q)
        self.assertFalse(result.verified)
        self.assertTrue(result.violations)

        # Every definable unary predicate is a union of the classes below:
        # membership of a point depends only on its model and on the
        # element enumerated at eta, up to automorphism. q splits a class.
        split = False
        for eta in range(space.K):
            classes = {}
            for i, point in enumerate(space.points):
                element = point.enumeration[eta]
                orbit = min(theta[element]
                            for theta in space.automorphisms[point.model])
                classes.setdefault((point.model, orbit), set()).add(i in q(eta))
            split = split or any(len(v) > 1 for v in classes.values())
        self.assertTrue(split)

    def test_selection_covers_both_sides(self):
        p = formula_predicate(self.space, "ex x (x != y & r(x))")
        result = synthesize_definition(self.space, p)
        self.assertTrue(result.cover_complete)
        self.assertTrue(result.selected_psi)
        self.assertTrue(result.selected_phi)
        self.assertEqual(result.violations, ())

    def test_unary_completeness(self):
        atoms = invariant_atoms(self.space, 1)
        self.assertEqual(len(atoms), 6)
        count = 0
        for bits in itertools.product((0, 1), repeat=len(atoms)):
            chosen = [a for a, bit in zip(atoms, bits) if bit]
            p = predicate_from_atoms(self.space, chosen, 1)
            result = synthesize_definition(self.space, p)
            self.assertTrue(result.verified, result.text)
            count += 1
        self.assertEqual(count, 64)

    @test_base.timeout_decorator.timeout(10 * 60)
    def test_binary_completeness(self):
        atoms = invariant_atoms(self.space, 2)
        self.assertEqual(len(atoms), 10)
        for bits in itertools.product((0, 1), repeat=len(atoms)):
            chosen = [a for a, bit in zip(atoms, bits) if bit]
            p = predicate_from_atoms(self.space, chosen, 2)
            result = synthesize_definition(self.space, p)
            self.assertTrue(result.verified, result.text)

    def test_round_trip(self):
        for f in test_base.corpus(self.sig, count=50, seed=41, free=("y",)):
            p = predicate_from_formula(self.space, f, 1)
            result = synthesize_definition(self.space, p)
            self.assertTrue(result.verified, print_formula(f))
            self.assertTrue(verify_definition(self.space, p,
                                              result.formula).verified)


if __name__ == "__main__":
    test_base.Tester().run()
