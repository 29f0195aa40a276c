"""Unit tests for Laurent polynomials and bounded expansion of generating functions."""

import logging
import os
import unittest
import unittest.mock

import sympy

from quiverpoly.general.exc import WindowUnsound, TermLimitExceeded
from quiverpoly.laurent import VarId, LaurentPoly, GeneratingFunction, ExponentWindow, \
    exponents, mul, expand, prune_inert

from .common import random_generator, random_laurent

A = VarId(1, 1)
B = VarId(2, 1)
C = VarId(3, 1)
A2 = VarId(1, 2)

SERIES_ORDER = 12


def series_oracle(g: GeneratingFunction, window: ExponentWindow) -> LaurentPoly:
    """Truncated power series product computed by sympy, restricted to the window."""
    symbols = {var: sympy.Symbol(str(var)) for var in g.variables()}
    product = sympy.Integer(1)
    for var, exponent in g.monomial:
        product *= symbols[var] ** exponent
    for (x, y), multiplicity in g.factors:
        ratio = symbols[x] / symbols[y]
        if multiplicity > 0:
            product *= (1 - ratio) ** multiplicity
        else:
            product *= sum(sympy.binomial(n - multiplicity - 1, -multiplicity - 1) * ratio ** n
                           for n in range(SERIES_ORDER))
    var_of = {symbol: var for var, symbol in symbols.items()}
    terms = {}
    for monomial, coefficient in sympy.expand(product).as_coefficients_dict().items():
        exps = exponents({var_of[symbol]: int(power)
                          for symbol, power in monomial.as_powers_dict().items()
                          if symbol in var_of})
        terms[exps] = terms.get(exps, 0) + int(coefficient)
    return LaurentPoly(terms).restrict(window)


class LaurentPolyTests(unittest.TestCase):

    def test_arithmetic(self):
        x = LaurentPoly.monomial({A: 1})
        y = LaurentPoly.monomial({B: -1}, 2)
        self.assertEqual((x + y) * (x - y), x * x - y * y)
        self.assertEqual(x - x, 0)
        self.assertFalse(x - x)
        self.assertEqual(x * LaurentPoly.monomial({A: -1}), 1)
        self.assertEqual(3 * x, x + x + x)
        self.assertEqual(len(x + y), 2)
        self.assertEqual(str(LaurentPoly()), '0')
        self.assertEqual(str(x + y), '1*u1_1 + 2*u2_1^-1')

    def test_degrees(self):
        poly = LaurentPoly({((A, 2),): 1, ((A, 1), (B, 1)): -3})
        self.assertTrue(poly.is_homogeneous())
        self.assertEqual(poly.degrees(), {2})
        self.assertEqual(poly.coefficient({B: 1, A: 1}), -3)
        self.assertEqual(poly.variables(), {A, B})
        self.assertFalse((poly + LaurentPoly.one()).is_homogeneous())

    def test_canonical_exponents(self):
        self.assertEqual(exponents({B: 1, A: 0, C: -2}), ((B, 1), (C, -2)))
        self.assertEqual(exponents([(A, 1), (A, -1)]), ())

    def test_mul_laws(self):
        generator = random_generator()
        variables = [A, A2, B, C]
        for trial in range(30):
            first, second, third = [random_laurent(generator, variables, generator.randint(0, 4))
                                    for _ in range(3)]
            with self.subTest(trial=trial):
                self.assertEqual(mul(first, second), mul(second, first))
                self.assertEqual(mul(mul(first, second), third), mul(first, mul(second, third)))
                self.assertEqual(mul(first, second + third),
                                 mul(first, second) + mul(first, third))
                self.assertEqual(first * second, mul(first, second))


class WindowTests(unittest.TestCase):

    def test_bounds(self):
        window = ExponentWindow({A: -1, B: 0, C: 2}, 4)
        self.assertEqual(window.upper(A), 2)
        self.assertEqual(window.upper(C), 5)
        self.assertTrue(window.contains(((A, -1), (C, 5))))
        self.assertFalse(window.contains(((A, -2), (C, 6))))
        self.assertFalse(window.contains(((A, 1), (C, 2))))
        self.assertFalse(window.contains(((A2, 1), (C, 3))))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            ExponentWindow({A: 2, B: 2}, 3)


class ExpandTests(unittest.TestCase):

    examples = {
        'geometric': (GeneratingFunction({B: 3}, {(A, B): -1}), {A: 0, B: 0}),
        'chain': (GeneratingFunction({C: 2, B: 1}, {(A, B): -1, (A, C): -2, (B, C): 1}),
                  {A: 0, B: 0, C: 0}),
        'negative bound': (GeneratingFunction({C: 3, A: -1}, {(A, C): -1, (B, C): -1, (A, B): 2}),
                           {A: -1, B: 0, C: 0}),
        'same alphabet': (GeneratingFunction({A: 2, B: 1},
                                             {(A2, A): 1, (A, B): -1, (A2, B): -1}),
                          {A: 0, A2: 0, B: 0}),
        'shifted': (GeneratingFunction({B: 2, C: 1}, {(A, B): -2, (B, C): -1}),
                    {A: 1, B: 0, C: -1})}

    def test_geometric(self):
        g, lower = self.examples['geometric']
        result = expand(g, ExponentWindow(lower, 3))
        self.assertEqual(result, LaurentPoly({
            ((B, 3),): 1, ((A, 1), (B, 2)): 1, ((A, 2), (B, 1)): 1, ((A, 3),): 1}))

    def test_upper_bound(self):
        g = GeneratingFunction({B: 2}, {(A, B): -1})
        window = ExponentWindow({A: 0, B: -3}, 2)
        result = expand(g, window)
        self.assertEqual(len(result), window.upper(A) + 1)
        self.assertEqual(result.coefficient({A: window.upper(A), B: -3}), 1)
        self.assertEqual(result, series_oracle(g, window))

    def test_series_of_one_vertex(self):
        # singleton alphabets {u1}, {u2} of one vertex, u1 before u2
        g = GeneratingFunction({A: 1, B: 1}, {(A, B): -1})
        head = LaurentPoly({((A, 1), (B, 1)): 1, ((A, 2),): 1})
        self.assertEqual(expand(g, ExponentWindow({A: 0, B: 0}, 2)), head)
        self.assertEqual(expand(g, ExponentWindow({A: -1, B: 0}, 2)), head)
        self.assertEqual(expand(g, ExponentWindow({A: 0, B: -1}, 2)),
                         head + LaurentPoly.monomial({A: 3, B: -1}))
        self.assertEqual(expand(g, ExponentWindow({A: -1, B: -1}, 2)),
                         head + LaurentPoly.monomial({A: 3, B: -1}))

    def test_against_series(self):
        for name, (g, lower) in self.examples.items():
            with self.subTest(name=name):
                window = ExponentWindow(lower, g.degree)
                result = expand(g, window)
                self.assertEqual(result, series_oracle(g, window))
                self.assertTrue(result.is_homogeneous())

    def test_degree_mismatch(self):
        g, lower = self.examples['geometric']
        with self.assertRaises(ValueError):
            expand(g, ExponentWindow(lower, 2))

    def test_unsound(self):
        with self.assertRaises(WindowUnsound):
            GeneratingFunction({A: 1}, {(A, A): -1})
        with self.assertRaises(WindowUnsound):
            expand(GeneratingFunction({A: 1}, {(B, A): -1}), ExponentWindow({A: 0, B: 0}, 1))
        with self.assertRaises(WindowUnsound):
            expand(GeneratingFunction({A: 1}, {(A2, A): -1}), ExponentWindow({A: 0, A2: 0}, 1))
        with self.assertRaises(WindowUnsound):
            expand(GeneratingFunction({B: 1}, {(A, B): -1}), ExponentWindow({B: 0}, 1))

    def test_term_limit(self):
        g, lower = self.examples['geometric']
        with unittest.mock.patch.dict(os.environ, {'QR_MAX_TERMS': '2'}):
            with self.assertRaises(TermLimitExceeded) as raised:
                expand(g, ExponentWindow(lower, 3))
        self.assertEqual(raised.exception.exit_code, 4)


class PruneTests(unittest.TestCase):

    def test_prune_single(self):
        g = GeneratingFunction({B: 2}, {(A, B): -1, (A, C): -1})
        window = ExponentWindow({A: 0, B: 0, C: 0}, 2)
        pruned = prune_inert(g, window)
        self.assertEqual(pruned, GeneratingFunction({B: 2}, {(A, B): -1}))
        self.assertEqual(expand(pruned, window), expand(g, window))

    def test_prune_repeated(self):
        g = GeneratingFunction({A: 1}, {(A, B): -1, (B, C): -1})
        window = ExponentWindow({A: 0, B: 0, C: 0}, 1)
        pruned = prune_inert(g, window)
        self.assertEqual(pruned, GeneratingFunction({A: 1}))
        self.assertEqual(expand(g, window), LaurentPoly.monomial({A: 1}))

    def test_negative_bound_kept(self):
        g = GeneratingFunction({B: 2}, {(A, B): -1, (A, C): -1})
        window = ExponentWindow({A: 0, B: 0, C: -1}, 2)
        self.assertEqual(prune_inert(g, window), g)

    def test_prune_neutral_on_examples(self):
        for name, (g, lower) in ExpandTests.examples.items():
            with self.subTest(name=name):
                window = ExponentWindow(lower, g.degree)
                self.assertEqual(expand(prune_inert(g, window), window), expand(g, window))

    def test_reduction_chain(self):
        u, w1, w2, s, t1, t2, x = VarId(1, 1), VarId(3, 1), VarId(3, 2), VarId(4, 1), \
            VarId(5, 1), VarId(5, 2), VarId(6, 1)
        g = GeneratingFunction(
            {w1: 2, w2: 2, u: -1},
            [((w1, w2), 1), ((u, s), 1), ((t1, t2), 1), ((w1, x), 1), ((w2, x), 1),
             ((u, w1), -1), ((u, w2), -1), ((s, x), -1), ((u, x), -1), ((t1, x), -1),
             ((t2, x), -1)])
        window = ExponentWindow({var: 0 for var in g.variables()}, 3)
        with self.assertLogs('quiverpoly.laurent', level=logging.DEBUG) as logs:
            pruned = prune_inert(g, window)
        rounds = [record.getMessage() for record in logs.records
                  if record.getMessage().startswith('pruning')]
        self.assertEqual(rounds, ['pruning inert variables u6_1',
                                  'pruning inert variables u4_1, u5_2'])
        self.assertEqual(pruned, GeneratingFunction(
            {w1: 2, w2: 2, u: -1}, {(w1, w2): 1, (u, w1): -1, (u, w2): -1}))
        integer_part = LaurentPoly({((w1, 1), (w2, 2)): 1, ((u, 1), (w2, 2)): 1, ((w1, 3),): -1})
        self.assertEqual(expand(g, window), integer_part)
        self.assertEqual(expand(pruned, window), integer_part)
        reduced = expand(pruned, ExponentWindow({w1: 0, w2: 0, u: -1}, 3))
        self.assertIn(((u, -1), (w1, 2), (w2, 2)), reduced.terms)
        self.assertEqual(reduced.restrict(window), integer_part)
