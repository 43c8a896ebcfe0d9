#!/usr/bin/env python

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import itertools
import random
import unittest

import test_base

from bvquery.exceptions import PermutationError
from bvquery.group.action import (
    InvarianceReport, apply_permutation, check_invariance, point_permutation,
)
from bvquery.group.permutation import (
    Permutation, compose, cycle, group_closure, identity, parse_cycles,
    random_permutations, symmetric_generators, transposition,
)
from bvquery.logic.parser import parse_formula
from bvquery.predicates.predicate import (
    Predicate, fibre_size_predicate, predicate_from_formula,
)
from bvquery.space.space import Point


def altered(predicate, eta=0):
    '''predicate with its least point removed from p(eta).'''
    table = list(predicate.table)
    value = table[eta]
    table[eta] = value - predicate.space.clopen(value.members()[:1])
    return Predicate(predicate.space, predicate.arity, table)


class PermutationTests(unittest.TestCase):
    def test_generators(self):
        self.assertEqual(symmetric_generators(2), [Permutation((1, 0))])
        self.assertEqual([g.to_cycles() for g in symmetric_generators(4)],
                         ["(0 1)", "(0 1 2 3)"])
        with self.assertRaises(PermutationError):
            symmetric_generators(1)

    def test_closure(self):
        self.assertEqual(len(group_closure(symmetric_generators(4))), 24)
        self.assertEqual(len(group_closure(symmetric_generators(3))), 6)
        self.assertEqual(len(group_closure([cycle(4, range(4))])), 4)

    def test_compose(self):
        p = transposition(3, 0, 1)
        q = transposition(3, 1, 2)
        self.assertEqual((p * q)(1), 2)
        self.assertEqual(compose(p, q).to_cycles(), "(0 1 2)")
        self.assertTrue((p * p).is_identity())
        with self.assertRaises(PermutationError):
            compose(p, identity(4))

    def test_inverse(self):
        for p in random_permutations(6, 20, seed=4):
            self.assertTrue((p * p.inverse()).is_identity())
            self.assertTrue((p.inverse() * p).is_identity())

    def test_cycles(self):
        p = parse_cycles("(0 1)(2 3)", 4)
        self.assertEqual(p.images, (1, 0, 3, 2))
        self.assertEqual(p.to_cycles(), "(0 1)(2 3)")
        self.assertEqual(parse_cycles("(0, 2, 1)", 3).images, (2, 0, 1))
        self.assertEqual(identity(3).to_cycles(), "()")
        self.assertTrue(parse_cycles("()", 3).is_identity())
        for p in random_permutations(5, 20, seed=1):
            self.assertEqual(parse_cycles(p.to_cycles(), 5), p)

    def test_invalid(self):
        with self.assertRaises(PermutationError):
            Permutation((0, 0, 1))
        with self.assertRaises(PermutationError):
            parse_cycles("(0 1", 4)
        with self.assertRaises(PermutationError):
            parse_cycles("(0 5)", 4)
        with self.assertRaises(PermutationError):
            parse_cycles("(0 a)", 4)
        with self.assertRaises(PermutationError):
            cycle(4, [0, 1, 0])

    def test_random_is_seeded(self):
        self.assertEqual(random_permutations(6, 5, seed=3),
                         random_permutations(6, 5, seed=3))


class ActionTests(unittest.TestCase):
    def setUp(self):
        self.space = test_base.e1_space()
        self.sig = self.space.model_class.theory.signature

    def test_identity(self):
        e = identity(4)
        for point in self.space.points:
            self.assertEqual(apply_permutation(self.space, e, point), point)
        self.assertEqual(point_permutation(self.space, e),
                         tuple(range(self.space.size)))

    def test_tables_per_space(self):
        swap = parse_cycles("(0 1)", 4)
        table = point_permutation(self.space, swap)
        self.assertIs(point_permutation(self.space, swap), table)
        self.assertEqual(self.space.lookup(3, (0, 0, 1, 1)), 5)
        self.assertEqual(table[5], self.space.lookup(3, (0, 0, 1, 1)))
        unbalanced = test_base.e1_space("unbalanced")
        other = point_permutation(unbalanced, swap)
        self.assertEqual(len(table), 14)
        self.assertEqual(len(other), 30)
        for i, point in enumerate(unbalanced.points):
            self.assertEqual(unbalanced.points[other[i]],
                             apply_permutation(unbalanced, swap, point))

    def test_swap_moves_fibre(self):
        point = Point(2, (0, 0, 1, 1))
        moved = apply_permutation(self.space, parse_cycles("(1 2)", 4), point)
        self.assertEqual(moved, Point(2, (0, 1, 0, 1)))

    def test_swap_moves_value(self):
        f = parse_formula("r(x1)", self.sig)
        p = parse_cycles("(0 1)", 4)
        moved = apply_permutation(self.space, p, self.space.evaluate(f, (0,)))
        self.assertEqual(len(moved), 7)
        self.assertEqual(moved, self.space.evaluate(f, (1,)))

    def test_points_and_indices_agree(self):
        for p in random_permutations(4, 10, seed=2):
            for i, point in enumerate(self.space.points):
                self.assertEqual(
                    apply_permutation(self.space, p, point),
                    self.space.points[apply_permutation(self.space, p, i)])

    def test_action_law(self):
        perms = list(itertools.permutations(range(4)))
        rng = random.Random(0)
        for _ in range(50):
            p = Permutation(rng.choice(perms))
            q = Permutation(rng.choice(perms))
            for i in range(self.space.size):
                self.assertEqual(
                    apply_permutation(self.space, p * q, i),
                    apply_permutation(self.space, p,
                                      apply_permutation(self.space, q, i)))

    def test_boolean_automorphism(self):
        space = self.space
        rng = random.Random(7)
        for p in random_permutations(4, 10, seed=8):
            a = space.clopen(rng.sample(range(space.size), 5))
            b = space.clopen(rng.sample(range(space.size), 6))

            def move(c):
                return apply_permutation(space, p, c)

            self.assertEqual(move(a | b), move(a) | move(b))
            self.assertEqual(move(a & b), move(a) & move(b))
            self.assertEqual(move(~a), ~move(a))
            self.assertEqual(move(space.empty()), space.empty())
            self.assertEqual(move(space.full()), space.full())

    def check_equivariance(self, space, seed):
        sig = space.model_class.theory.signature
        rng = random.Random(seed)
        formulas = test_base.corpus(sig, count=100, seed=seed)
        perms = random_permutations(space.K, 100, seed=seed)
        for f, p in zip(formulas, perms):
            xi = (rng.randrange(space.K), rng.randrange(space.K))
            self.assertEqual(
                apply_permutation(space, p, space.evaluate(f, xi)),
                space.evaluate(f, p.apply_tuple(xi)))

    def test_equivariance_e1(self):
        self.check_equivariance(self.space, 21)

    @test_base.timeout_decorator.timeout(10 * 60)
    def test_equivariance_graphs(self):
        self.check_equivariance(test_base.graph_space(), 22)

    def test_equivariance_functions(self):
        self.check_equivariance(test_base.function_space(), 23)


class InvarianceTests(unittest.TestCase):
    def setUp(self):
        self.space = test_base.e1_space()
        self.sig = self.space.model_class.theory.signature
        self.gens = symmetric_generators(4)

    def test_definable_is_invariant(self):
        p = predicate_from_formula(self.space,
                                   parse_formula("r(y)", self.sig), 1)
        report = check_invariance(self.space, p, self.gens)
        self.assertEqual(report, InvarianceReport(True))
        self.assertEqual(report.to_dict(), {"invariant": True})

    def test_counterexample(self):
        p = predicate_from_formula(self.space,
                                   parse_formula("r(y)", self.sig), 1)
        report = check_invariance(self.space, altered(p), self.gens)
        self.assertFalse(report.invariant)
        self.assertEqual((report.permutation, report.indices), (0, (0,)))
        self.assertEqual(report.to_dict(), {"invariant": False,
                                            "permutation": 0,
                                            "indices": [0]})

    def test_fibre_size_invariant(self):
        space = test_base.e1_space("unbalanced")
        q = fibre_size_predicate(space)
        everything = [Permutation(p) for p in itertools.permutations(range(4))]
        self.assertTrue(check_invariance(space, q, everything).invariant)
        self.assertTrue(check_invariance(space, q, self.gens).invariant)

    def test_corpus_predicates_are_invariant(self):
        for free, arity in [(("y",), 1), (("y1", "y2"), 2)]:
            for f in test_base.corpus(self.sig, count=50, seed=arity,
                                      free=free):
                p = predicate_from_formula(self.space, f, arity)
                self.assertTrue(
                    check_invariance(self.space, p, self.gens).invariant)

    def test_generators_suffice(self):
        sampled = random_permutations(4, 100, seed=12)
        candidates = []
        for text in ["r(y)", "ex x (x != y & r(x))", "y = y"]:
            p = predicate_from_formula(self.space,
                                       parse_formula(text, self.sig), 1)
            candidates.extend([p, altered(p), altered(p, 3)])
        for p in candidates:
            self.assertEqual(
                check_invariance(self.space, p, self.gens).invariant,
                check_invariance(self.space, p, sampled).invariant)


if __name__ == "__main__":
    test_base.Tester().run()
