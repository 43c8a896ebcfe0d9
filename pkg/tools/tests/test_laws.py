#!/usr/bin/env python

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import random
import unittest

import test_base

from bvquery.logic.parser import parse_formula
from bvquery.logic.syntax import (
    And, Exists, Forall, Iff, Implies, Not, Or,
)
from bvquery.logic.translate import translate_to_relational


class LawChecks(object):
    '''Boolean-valued laws checked over a corpus of random formulas.'''

    seed = 0

    def space(self):
        raise NotImplementedError

    def setUp(self):
        self.sp = self.space()
        self.sig = self.sp.model_class.theory.signature
        self.formulas = test_base.corpus(self.sig, count=200, seed=self.seed)
        self.rng = random.Random(self.seed)

    def xi(self):
        K = self.sp.K
        return (self.rng.randrange(K), self.rng.randrange(K))

    def value(self, f, xi):
        return self.sp.evaluate(f, xi)

    def test_connectives(self):
        pairs = zip(self.formulas, self.formulas[1:] + self.formulas[:1])
        for f, g in pairs:
            xi = self.xi()
            a, b = self.value(f, xi), self.value(g, xi)
            self.assertEqual(self.value(Not(f), xi), ~a)
            self.assertEqual(self.value(And(f, g), xi), a & b)
            self.assertEqual(self.value(Or(f, g), xi), a | b)
            self.assertEqual(self.value(Implies(f, g), xi), ~a | b)
            self.assertEqual(self.value(Iff(f, g), xi),
                             (a & b) | (~a & ~b))

    def test_tautologies(self):
        for f in self.formulas:
            xi = self.xi()
            for law in [Or(f, Not(f)), Implies(f, f), Iff(f, f),
                        Not(And(f, Not(f)))]:
                self.assertTrue(self.value(law, xi).is_full())

    def test_quantifiers(self):
        '''ex x1 f is the union over indices, all x1 f the intersection.'''
        K = self.sp.K
        for f in self.formulas:
            eta = self.rng.randrange(K)
            union, meet = self.sp.empty(), self.sp.full()
            for i in range(K):
                v = self.value(f, (i, eta))
                union = union | v
                meet = meet & v
            self.assertEqual(
                self.sp.evaluate(Exists("x1", f), (eta,), ["x2"]), union)
            self.assertEqual(
                self.sp.evaluate(Forall("x1", f), (eta,), ["x2"]), meet)

    def test_equality(self):
        sp, K = self.sp, self.sp.K
        eq = parse_formula("x1 = x2", self.sig)
        for i in range(K):
            self.assertTrue(self.value(eq, (i, i)).is_full())
        for _ in range(20):
            a, b, c = (self.rng.randrange(K) for _ in range(3))
            self.assertEqual(self.value(eq, (a, b)), self.value(eq, (b, a)))
            self.assertTrue(self.value(eq, (a, b)) & self.value(eq, (b, c))
                            <= self.value(eq, (a, c)))

    def test_substitution(self):
        '''[[a = c]] & [[f(a, b)]] <= [[f(c, b)]].'''
        K = self.sp.K
        for f in self.formulas:
            a, b, c = (self.rng.randrange(K) for _ in range(3))
            same = self.sp.equality_clopen((a,), (c,))
            self.assertTrue(same & self.value(f, (a, b))
                            <= self.value(f, (c, b)))


class E1LawTests(LawChecks, unittest.TestCase):
    seed = 31

    def space(self):
        return test_base.e1_space()


class UnbalancedLawTests(LawChecks, unittest.TestCase):
    seed = 32

    def space(self):
        return test_base.e1_space("unbalanced")


class GraphLawTests(LawChecks, unittest.TestCase):
    seed = 33

    def space(self):
        return test_base.graph_space()

    @test_base.timeout_decorator.timeout(10 * 60)
    def test_quantifiers(self):
        super(GraphLawTests, self).test_quantifiers()


class FunctionLawTests(LawChecks, unittest.TestCase):
    seed = 34

    def space(self):
        return test_base.function_space()

    def test_totality(self):
        for text in ["all x ex y f(x) = y",
                     "all x all y all z (f(x) = y & f(x) = z -> y = z)",
                     "ex x c = x"]:
            self.assertTrue(self.value(parse_formula(text, self.sig),
                                       ()).is_full(), text)

    def test_term_substitution(self):
        K = self.sp.K
        nested = parse_formula("r(f(x1))", self.sig)
        flat = parse_formula("ex z (f(x1) = z & r(z))", self.sig)
        for i in range(K):
            self.assertEqual(self.value(nested, (i,)), self.value(flat, (i,)))
        left = parse_formula("f(x1) = x2", self.sig)
        for _ in range(20):
            a, b, c = (self.rng.randrange(K) for _ in range(3))
            same = self.sp.equality_clopen((b,), (c,))
            self.assertTrue(same & self.value(left, (a, b))
                            <= self.value(left, (a, c)))

    def test_translation(self):
        for f in self.formulas:
            xi = self.xi()
            relational = translate_to_relational(f, self.sig)
            self.assertEqual(self.value(relational, xi), self.value(f, xi))


if __name__ == "__main__":
    test_base.Tester().run()
