"""Examples for quiverpoly tests."""

import os
import pathlib
import random
import typing as t
import unittest

from quiverpoly.general.document_reader import DocumentReader
from quiverpoly.documents import parse_quiver
from quiverpoly.laurent import VarId, LaurentPoly, exponents
from quiverpoly.rootsys import PositiveRoot, Quiver

_HERE = pathlib.Path(__file__).resolve().parent

EXAMPLES_ROOT = pathlib.Path(_HERE, 'examples')

QUIVERS_ROOT = EXAMPLES_ROOT.joinpath('quivers')

QUIVER_FILES = sorted(QUIVERS_ROOT.glob('*.json'))

QUIVER_TYPES = {
    'a1.json': 'A1', 'a2.json': 'A2', 'a3.json': 'A3', 'a3_linear.json': 'A3',
    'a4_alternating.json': 'A4', 'd4.json': 'D4', 'e6.json': 'E6'}

ROOT_COUNTS = {'A1': 1, 'A2': 3, 'A3': 6, 'A4': 10, 'D4': 12, 'E6': 36}

TEST_LONG = os.environ.get('TEST_LONG', '1') != '0'

RANDOM_SEED = 20180801


def read_quiver(name: str) -> Quiver:
    return parse_quiver(DocumentReader().read_file(QUIVERS_ROOT.joinpath(name)))


def execute_on_quiver_examples(**filters):
    """Run the decorated test once per example quiver document, each in its own subtest."""
    for filter_ in filters:
        assert filter_ in {'predicate', 'predicate_not'}, filter_

    def test_implementation_wrapper(test_function):
        def wrapped_test_implementation(test_case: unittest.TestCase):
            for input_path in QUIVER_FILES:
                if 'predicate' in filters and not filters['predicate'](input_path):
                    continue
                if 'predicate_not' in filters and filters['predicate_not'](input_path):
                    continue
                with test_case.subTest(input_path=input_path):
                    test_function(test_case, input_path)
        return wrapped_test_implementation
    return test_implementation_wrapper


def type_a(path: pathlib.Path) -> bool:
    return QUIVER_TYPES[path.name].startswith('A')


def a3_root(i: int, j: int) -> PositiveRoot:
    """Root alpha_ij = sum of simple roots i..j of a rank 3 path."""
    return PositiveRoot(tuple(int(i <= vertex <= j) for vertex in range(1, 4)))


def sample_dimensions(quiver: Quiver, bound: int) -> t.List[t.Tuple[int, ...]]:
    """Dimension vectors with entries up to bound, restricted to a sparse subset unless long."""
    vectors = [()]  # type: t.List[t.Tuple[int, ...]]
    for _ in quiver.vertices:
        vectors = [vector + (entry,) for vector in vectors for entry in range(bound + 1)]
    if TEST_LONG:
        return vectors
    return vectors[::max(1, len(vectors) // 8)]


def random_generator() -> random.Random:
    return random.Random(RANDOM_SEED)


def random_laurent(generator: random.Random, variables: t.Sequence[VarId], n_terms: int,
                   exponent_range: t.Tuple[int, int] = (-2, 3)) -> LaurentPoly:
    """Sparse Laurent polynomial with up to n_terms terms and small nonzero coefficients."""
    terms = {}
    for _ in range(n_terms):
        exps = exponents({var: generator.randint(*exponent_range) for var in variables})
        terms[exps] = terms.get(exps, 0) + generator.choice([-3, -2, -1, 1, 2, 3])
    return LaurentPoly(terms)
