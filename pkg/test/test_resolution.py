"""Unit tests for directed partitions, resolution pairs and generating functions."""

import unittest

from quiverpoly.general.exc import ConstructionFailed, DimensionMismatch
from quiverpoly.evaluator import compute
from quiverpoly.laurent import GeneratingFunction
from quiverpoly.orbits import OrbitLabel, enumerate_orbits
from quiverpoly.resolution import DirectedPartition, PartitionFinder, ResolutionPair, \
    verify_directed, find_directed_partition, alternative_partitions, resolution_pair, \
    factor_data, total_codim, build_generating_function, build_vertex_generating_function, \
    interference_by_arrows
from quiverpoly.rootsys import DynkinType, Quiver, standard_quiver, quiver_roots
from quiverpoly.suite import GOLDEN_DIMENSION, golden_quiver, golden_orbit, golden_partitions, \
    golden_chern

from .common import TEST_LONG, a3_root, execute_on_quiver_examples, read_quiver

STRATEGIES = ('greedy', 'greedy-last', 'coarse')


def type_a_quivers(max_rank: int):
    for n in range(1, max_rank + 1):
        quiver = standard_quiver(DynkinType('A', n))
        yield quiver
        yield quiver.reversed()
        yield Quiver(n, [(i, i + 1) if i % 2 else (i + 1, i) for i in range(1, n)])


class DirectedPartitionTests(unittest.TestCase):

    def test_golden(self):
        quiver = golden_quiver()
        for partition in golden_partitions():
            self.assertTrue(verify_directed(quiver, partition).ok, msg=partition)
            self.assertTrue(partition.covers(quiver_roots(quiver)))
        first = golden_partitions()[0]
        self.assertEqual(len(first), 3)
        self.assertEqual(first.blocks[0], (a3_root(2, 2),))
        self.assertEqual(str(first).count('|'), 2)

    def test_reversed_fails(self):
        quiver = golden_quiver()
        partition = DirectedPartition(reversed(golden_partitions()[0].blocks))
        report = verify_directed(quiver, partition)
        self.assertFalse(report.ok)
        self.assertTrue(all(v.value < 0 and v.condition == '<a,b> >= 0'
                            or v.value > 0 and v.condition == '<b,a> <= 0'
                            for v in report.violations))

    def test_repeated_root(self):
        partition = DirectedPartition([[a3_root(2, 2)], [a3_root(2, 2), a3_root(1, 1)]])
        report = verify_directed(golden_quiver(), partition)
        self.assertIn('disjoint', [v.condition for v in report.violations])
        self.assertEqual(report.violations[0].first_block, 1)
        self.assertEqual(report.violations[0].second_block, 2)

    def test_strategies_registered(self):
        self.assertEqual(PartitionFinder.registered_keys(), sorted(STRATEGIES))
        with self.assertRaises(ValueError):
            find_directed_partition(golden_quiver(), strategy='random')

    def test_type_a(self):
        max_rank = 8 if TEST_LONG else 5
        for quiver in type_a_quivers(max_rank):
            for strategy in STRATEGIES:
                with self.subTest(quiver=quiver, strategy=strategy):
                    partition = find_directed_partition(quiver, strategy=strategy)
                    self.assertTrue(partition.covers(quiver_roots(quiver)))
                    self.assertEqual(len(partition.roots()), len(quiver_roots(quiver)))

    @execute_on_quiver_examples()
    def test_examples(self, input_path):
        quiver = read_quiver(input_path.name)
        for strategy in STRATEGIES:
            partition = find_directed_partition(quiver, strategy=strategy)
            self.assertTrue(verify_directed(quiver, partition).ok)
            self.assertEqual(sorted(partition.roots()), list(quiver_roots(quiver)))

    def test_support_only(self):
        quiver = golden_quiver()
        support = golden_orbit().support()
        partition = find_directed_partition(quiver, support)
        self.assertEqual(sorted(partition.roots()), sorted(support))

    def test_alternatives(self):
        quiver = golden_quiver()
        partitions = alternative_partitions(quiver, golden_orbit().support())
        self.assertEqual(len(partitions), len(set(partitions)))
        self.assertEqual(partitions[0],
                         find_directed_partition(quiver, golden_orbit().support()))
        for partition in partitions:
            self.assertTrue(partition.covers(golden_orbit().support()))


class ResolutionPairTests(unittest.TestCase):

    def test_golden_pairs(self):
        quiver = golden_quiver()
        expected = [((2, 1, 3, 2, 1, 3), (1, 2, 1, 2, 0, 1), (1, 3, 2)),
                    ((1, 3, 2, 1, 3, 2), (1, 0, 2, 1, 2, 1), (3, 3))]
        for partition, (ii, rr, segments) in zip(golden_partitions(), expected):
            pair = resolution_pair(quiver, golden_orbit(), partition)
            self.assertEqual(pair, ResolutionPair(ii, rr, segments))
            pair.check(quiver)
            self.assertEqual(len(pair), 6)

    def test_vertex_alphabets(self):
        pair = resolution_pair(golden_quiver(), golden_orbit(), golden_partitions()[0])
        alphabets = pair.alphabets()
        self.assertEqual([len(_) for _ in alphabets], [1, 2, 1, 2, 0, 1])
        concatenated = pair.vertex_alphabets(3)
        self.assertEqual(concatenated[1], alphabets[1])
        self.assertEqual(concatenated[2], alphabets[0] + alphabets[3])
        self.assertEqual(concatenated[3], alphabets[2] + alphabets[5])
        self.assertEqual(pair.vertex_of_alphabet(), {1: 2, 2: 1, 3: 3, 4: 2, 5: 1, 6: 3})

    def test_check(self):
        quiver = golden_quiver()
        with self.assertRaises(DimensionMismatch):
            ResolutionPair((2, 1), (1, 1), (2,)).check(quiver)
        with self.assertRaises(DimensionMismatch):
            ResolutionPair((1, 1), (1, 1), (2,)).check(quiver)
        with self.assertRaises(DimensionMismatch):
            ResolutionPair((1, 2), (1,), (2,)).check(quiver)
        ResolutionPair((1, 2), (1, 1), (1, 1)).check(quiver)

    def test_uncovered_orbit(self):
        partition = DirectedPartition([[a3_root(2, 2)]])
        with self.assertRaises(DimensionMismatch):
            resolution_pair(golden_quiver(), golden_orbit(), partition)

    def test_zero_ranks_dropped(self):
        quiver = golden_quiver()
        pair = resolution_pair(quiver, golden_orbit(), golden_partitions()[0], keep_zero=False)
        self.assertEqual(pair, ResolutionPair((2, 1, 3, 2, 3), (1, 2, 1, 2, 1), (1, 3, 1)))
        for form in ('c', 'delta', 'vertex'):
            with self.subTest(form=form):
                result = compute(quiver, GOLDEN_DIMENSION, golden_orbit(),
                                 golden_partitions()[0], form, keep_zero=False)
                self.assertEqual(result.chern, golden_chern())


class GeneratingFunctionTests(unittest.TestCase):

    def test_factor_data(self):
        quiver = golden_quiver()
        pair = resolution_pair(quiver, golden_orbit(), golden_partitions()[0])
        factors = factor_data(quiver, pair)
        self.assertEqual([data.n for data in factors], [2, 0, -1, 1, 0, 0])
        alphabets = pair.alphabets()
        self.assertEqual(list(factors[0].b), list(alphabets[3]))
        self.assertEqual(list(factors[1].c), list(alphabets[3]))
        self.assertEqual(list(factors[2].c), list(alphabets[3]))
        self.assertEqual(list(factors[3].c), [])
        self.assertEqual(total_codim(pair, factors), 3)

    def test_codimension_independent_of_partition(self):
        quiver = golden_quiver()
        for label in enumerate_orbits(quiver, GOLDEN_DIMENSION):
            degrees = set()
            for strategy in STRATEGIES:
                partition = find_directed_partition(quiver, label.support(), strategy)
                pair = resolution_pair(quiver, label, partition)
                degrees.add(total_codim(pair, factor_data(quiver, pair)))
            with self.subTest(label=label):
                self.assertEqual(len(degrees), 1)
                self.assertGreaterEqual(degrees.pop(), 0)

    def test_interference_identity(self):
        quiver = read_quiver('a4_alternating.json')
        for label in enumerate_orbits(quiver, (1, 2, 2, 1)):
            partition = find_directed_partition(quiver, label.support())
            pair = resolution_pair(quiver, label, partition)
            g, _ = build_generating_function(quiver, pair, 'delta')
            with self.subTest(label=label):
                self.assertEqual(GeneratingFunction((), g.factors),
                                 interference_by_arrows(quiver, pair))

    def test_generic_vertex_form(self):
        quiver = golden_quiver()
        m11, m12, m13, m22, m23, m33 = 1, 2, 3, 4, 5, 6
        label = OrbitLabel(3, [(a3_root(1, 1), m11), (a3_root(1, 2), m12),
                               (a3_root(1, 3), m13), (a3_root(2, 2), m22),
                               (a3_root(2, 3), m23), (a3_root(3, 3), m33)])
        pair = resolution_pair(quiver, label, golden_partitions()[0])
        self.assertEqual(pair.rr, (4, 5, 8, 10, 1, 6))
        g, factors = build_vertex_generating_function(quiver, pair)
        self.assertEqual([data.n for data in factors], [10, -1, -6, 7, 0, 0])
        self.assertEqual(len(g.denominator_factors()), (5 + 8) * 10)
        self.assertEqual(g.numerator_factors(), [])

    def test_c_form_discriminants(self):
        quiver = golden_quiver()
        pair = resolution_pair(quiver, golden_orbit(), golden_partitions()[0])
        c_form, _ = build_generating_function(quiver, pair, 'c')
        delta_form, _ = build_generating_function(quiver, pair, 'delta')
        extra = set(c_form.factors) - set(delta_form.factors)
        alphabets = pair.alphabets()
        self.assertEqual(extra, {((alphabets[1][0], alphabets[1][1]), 1),
                                 ((alphabets[3][0], alphabets[3][1]), 1)})
        with self.assertRaises(ValueError):
            build_generating_function(quiver, pair, 'vertex')

    def test_unconstructible_support_reported(self):
        quiver = golden_quiver()
        with self.assertRaises(ConstructionFailed):
            compute(quiver, GOLDEN_DIMENSION, golden_orbit(),
                    DirectedPartition(reversed(golden_partitions()[0].blocks)))
