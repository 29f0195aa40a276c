"""Golden fixtures and oracle checks runnable from the command line."""

import logging
import sys
import typing as t

from colorama import Fore, Style

from . import delta_ops
from .delta_ops import ChernBasisPoly, SchurBasisPoly, AlphabetLayout, alphabet_layouts
from .evaluator import compute, gtp_orbit, gtp_oracle, gtp_quiver, positivity_report, sweep
from .laurent import VarId, LaurentPoly, GeneratingFunction, ExponentWindow, expand
from .orbits import OrbitLabel, enumerate_orbits
from .resolution import DirectedPartition, verify_directed, resolution_pair, \
    build_generating_function, build_vertex_generating_function, interference_by_arrows
from .rootsys import PositiveRoot, Quiver

__all__ = ['SUITES', 'run_suite', 'golden_quiver', 'golden_orbit', 'golden_partitions',
           'golden_chern', 'golden_schur']

_LOG = logging.getLogger(__name__)

Check = t.Callable[..., None]

SUITES = {'paper': [], 'oracle': []}  # type: t.Dict[str, t.List[t.Tuple[str, Check]]]


def fixture(suite: str, name: str, parallel: bool = False):
    """Register a check. Parallel checks are called with the number of worker processes."""
    def register(check: Check) -> Check:
        check.parallel = parallel
        SUITES[suite].append((name, check))
        return check
    return register


def _expect_equal(actual, expected, what: str) -> None:
    if actual != expected:
        raise AssertionError('{}: got {}, expected {}'.format(what, actual, expected))


def golden_quiver() -> Quiver:
    """The A3 quiver 1 -> 2 <- 3."""
    return Quiver(3, [(1, 2), (3, 2)])


def _root(i: int, j: int) -> PositiveRoot:
    return PositiveRoot(tuple(int(i <= vertex <= j) for vertex in range(1, 4)))


def golden_orbit() -> OrbitLabel:
    return OrbitLabel(3, [(_root(1, 3), 1), (_root(1, 2), 1), (_root(2, 2), 1),
                          (_root(3, 3), 1)])


GOLDEN_DIMENSION = (2, 3, 2)


def golden_partitions() -> t.List[DirectedPartition]:
    return [
        DirectedPartition([[_root(2, 2)], [_root(1, 2), _root(2, 3), _root(1, 3)],
                           [_root(1, 1), _root(3, 3)]]),
        DirectedPartition([[_root(2, 2), _root(1, 2), _root(2, 3)],
                           [_root(1, 3), _root(1, 1), _root(3, 3)]])]


def golden_chern() -> ChernBasisPoly:
    c = ChernBasisPoly.symbol
    return -c(2, 3) + c(2, 2) * c(2, 1) + c(2, 2) * c(1, 1)


def golden_schur() -> SchurBasisPoly:
    return SchurBasisPoly(3, {((), (2, 1), ()): 1, ((1,), (2,), ()): 1})


@fixture('paper', 'straightening of fake Schur polynomials')
def _straightening():
    _expect_equal(delta_ops.straighten((3, 4)), None, 'Delta_34')
    _expect_equal(delta_ops.straighten((1, 4)), (-1, (3, 2)), 'Delta_14')
    _expect_equal(delta_ops.straighten((1, 5, 4)), (1, (4, 3, 3)), 'Delta_154')
    _expect_equal(delta_ops.straighten((-1, -2)), None, 'Delta_-1,-2')


# alphabets {u1, u2} at vertex 1, {v1, v2} and {w} at vertex 2
_U1, _U2, _V1, _V2, _W = VarId(1, 1), VarId(1, 2), VarId(2, 1), VarId(2, 2), VarId(3, 1)
_OPERATOR_VERTICES = {1: 1, 2: 2, 3: 2}


def _operator_example() -> LaurentPoly:
    monomial = LaurentPoly.monomial
    return monomial({_U1: 2, _U2: 1, _V1: 5, _V2: 1, _W: 2}) \
        + monomial({_U1: 2, _U2: 1, _V1: 1, _V2: 2, _W: 3}) + monomial({_U1: 1, _U2: 4}) \
        + monomial({_V1: -1, _V2: 2}) + monomial({_U1: -1, _U2: -2})


# the series example takes u1 and u2 as singleton alphabets of vertex 1, u1 before u2
_S1, _S2 = VarId(1, 1), VarId(2, 1)
_SERIES_VERTICES = {1: 1, 2: 1}
_SERIES_LAYOUTS = [AlphabetLayout(1, (_S1, _S2))]


def _geometric_example(lower_u1: int) -> LaurentPoly:
    g = GeneratingFunction({_S1: 1, _S2: 1}, [((_S1, _S2), -1)])
    return expand(g, ExponentWindow({_S1: lower_u1, _S2: 0}, 2))


@fixture('paper', 'C operation on monomials and series')
def _c_operation():
    c = ChernBasisPoly.symbol

    def d(degree):
        return c(2, degree)

    _expect_equal(delta_ops.C_op(_operator_example(), _OPERATOR_VERTICES),
                  c(1, 2) * c(1, 1) * d(5) * d(1) * d(2) + c(1, 2) * c(1, 1) * d(1) * d(2) * d(3)
                  + c(1, 1) * c(1, 4), 'C of five monomials')
    antisymmetric = LaurentPoly.monomial({_U1: 3, _U2: 2}) \
        - LaurentPoly.monomial({_U1: 2, _U2: 3})
    _expect_equal(delta_ops.C_op(antisymmetric, _OPERATOR_VERTICES), ChernBasisPoly(),
                  'C of u1^2 u2^2 (u1 - u2)')
    _expect_equal(delta_ops.C_op(_geometric_example(0), _SERIES_VERTICES),
                  c(1, 1) * c(1, 1) + c(1, 2), 'C of u1 u2 / (1 - u1/u2)')


@fixture('paper', 'Delta operation on monomials and series')
def _delta_operation():
    layouts = alphabet_layouts((2, 2, 1), _OPERATOR_VERTICES)
    delta = delta_ops.delta_to_chern
    _expect_equal(delta_ops.delta_op(_operator_example(), layouts),
                  delta((2, 1), 1) * delta((5, 1), 2) * delta((2,), 2) - delta((3, 2), 1)
                  - delta((1, 0), 2), 'Delta of five monomials')
    _expect_equal(delta_ops.delta_op(_geometric_example(-1), _SERIES_LAYOUTS),
                  delta((1, 1), 1) + delta((2, 0), 1), 'Delta of u1 u2 / (1 - u1/u2)')


@fixture('paper', 'directed partitions of A3')
def _directed_partitions():
    quiver = golden_quiver()
    for partition in golden_partitions():
        _expect_equal(verify_directed(quiver, partition).violations, (), str(partition))
    first = golden_partitions()[0]
    if verify_directed(quiver, DirectedPartition(reversed(first.blocks))).ok:
        raise AssertionError('reversed partition {} passed verification'.format(first))


@fixture('paper', 'generic A3 resolution pair and vertex form')
def _generic_pair():
    quiver = golden_quiver()
    m11, m12, m13, m22, m23, m33 = 1, 2, 3, 4, 5, 6
    label = OrbitLabel(3, [(_root(1, 1), m11), (_root(1, 2), m12), (_root(1, 3), m13),
                           (_root(2, 2), m22), (_root(2, 3), m23), (_root(3, 3), m33)])
    pair = resolution_pair(quiver, label, golden_partitions()[0])
    _expect_equal(pair.ii, (2, 1, 3, 2, 1, 3), 'ii')
    _expect_equal(pair.rr, (m22, m12 + m13, m23 + m13, m12 + m13 + m23, m11, m33), 'rr')
    g, _ = build_vertex_generating_function(quiver, pair)
    alphabets = pair.alphabets()
    exponents = (m13 + m11 + m33, -m11, -m33, m11 + m33, 0, 0)
    expected = GeneratingFunction(
        {var: n for variables, n in zip(alphabets, exponents) for var in variables},
        [((x, y), -1) for k in (1, 2) for x in alphabets[k] for y in alphabets[3]])
    _expect_equal(g, expected, 'vertex-form generating function')


def _g1_g2() -> t.Tuple[GeneratingFunction, GeneratingFunction]:
    u, v1, v2, w, s1, s2, x = VarId(1, 1), VarId(2, 1), VarId(2, 2), VarId(3, 1), \
        VarId(4, 1), VarId(4, 2), VarId(6, 1)
    g1 = GeneratingFunction(
        {u: 2, s1: 1, s2: 1, w: -1},
        [((v1, v2), 1), ((s1, s2), 1), ((u, s1), 1), ((u, s2), 1), ((w, x), 1),
         ((v1, s1), -1), ((v2, s1), -1), ((v1, s2), -1), ((v2, s2), -1), ((w, s1), -1),
         ((w, s2), -1)])
    u, w1, w2, s, t1, t2, x = VarId(1, 1), VarId(3, 1), VarId(3, 2), VarId(4, 1), \
        VarId(5, 1), VarId(5, 2), VarId(6, 1)
    g2 = GeneratingFunction(
        {w1: 2, w2: 2, u: -1},
        [((w1, w2), 1), ((u, s), 1), ((t1, t2), 1), ((w1, x), 1), ((w2, x), 1),
         ((u, w1), -1), ((u, w2), -1), ((s, x), -1), ((u, x), -1), ((t1, x), -1),
         ((t2, x), -1)])
    return g1, g2


@fixture('paper', 'generating functions of the golden A3 orbit')
def _golden_generating_functions():
    quiver = golden_quiver()
    for partition, expected, ii, rr in zip(
            golden_partitions(), _g1_g2(),
            [(2, 1, 3, 2, 1, 3), (1, 3, 2, 1, 3, 2)], [(1, 2, 1, 2, 0, 1), (1, 0, 2, 1, 2, 1)]):
        pair = resolution_pair(quiver, golden_orbit(), partition)
        _expect_equal((pair.ii, pair.rr), (ii, rr), 'resolution pair')
        g, _ = build_generating_function(quiver, pair, 'c')
        _expect_equal(g, expected, 'C-form generating function')
        g, _ = build_generating_function(quiver, pair, 'delta')
        _expect_equal(GeneratingFunction((), g.factors), interference_by_arrows(quiver, pair),
                      'interference factors over arrows')


@fixture('paper', 'golden A3 quiver polynomial in every form and partition')
def _golden_polynomial():
    quiver = golden_quiver()
    for partition in golden_partitions():
        for form in ('c', 'delta', 'vertex'):
            result = compute(quiver, GOLDEN_DIMENSION, golden_orbit(), partition, form)
            _expect_equal(result.chern, golden_chern(), '{} form, {}'.format(form, partition))
            _expect_equal(result.degree, 3, 'degree')
        result = compute(quiver, GOLDEN_DIMENSION, golden_orbit(), partition, 'vertex')
        _expect_equal(result.schur, golden_schur(), 'Schur form, {}'.format(partition))
    result = compute(quiver, GOLDEN_DIMENSION, golden_orbit(), golden_partitions()[1], 'delta',
                     schur=True)
    _expect_equal(result.schur, golden_schur(), 'Delta form in Schur basis')


@fixture('paper', 'dense orbit has class 1')
def _dense_orbit():
    quiver = golden_quiver()
    orbits = enumerate_orbits(quiver, GOLDEN_DIMENSION)
    classes = [compute(quiver, GOLDEN_DIMENSION, label) for label in orbits]
    dense = [result for result in classes if result.degree == 0]
    _expect_equal(len(dense), 1, 'number of codimension 0 orbits')
    _expect_equal(dense[0].chern, ChernBasisPoly.one(), 'class of the dense orbit')


@fixture('oracle', 'Giambelli-Thom-Porteous determinants on A2')
def _gtp_grid():
    quiver = gtp_quiver()
    for e2 in range(1, 5):
        for e1 in range(1, e2 + 1):
            orbits = enumerate_orbits(quiver, (e1, e2))
            for r in range(e1 + 1):
                label = gtp_orbit(e1, e2, r)
                if label not in orbits:
                    raise AssertionError('rank deficiency {} orbit {} not enumerated'
                                         .format(r, label))
                result = compute(quiver, (e1, e2), label)
                _expect_equal(result.chern, gtp_oracle(e1, e2, r), 'e=({}, {}), r={}'
                              .format(e1, e2, r))


@fixture('oracle', 'form and partition agreement over A3 with e=(2,3,2)', parallel=True)
def _a3_sweep(jobs: int = 1):
    for result in sweep(golden_quiver(), GOLDEN_DIMENSION, partitions=golden_partitions(),
                        jobs=jobs):
        if len(result.partitions) < 2:
            raise AssertionError('orbit {} evaluated on a single partition {}'
                                 .format(result.label, result.partitions[0]))
        if not result.agree:
            raise AssertionError('orbit {}: {}'.format(result.label, {
                name: str(value.chern) for name, value in result.results.items()}))
        for name, value in result.results.items():
            if value.chern.degrees() - {value.degree}:
                raise AssertionError('orbit {} {} not homogeneous'.format(result.label, name))
            if value.schur is not None and positivity_report(value):
                raise AssertionError('orbit {} has negative quiver coefficients {}'
                                     .format(result.label, positivity_report(value)))


@fixture('oracle', 'pruning does not change results')
def _pruning():
    quiver = golden_quiver()
    for partition in golden_partitions():
        for form in ('c', 'delta', 'vertex'):
            pruned = compute(quiver, GOLDEN_DIMENSION, golden_orbit(), partition, form)
            plain = compute(quiver, GOLDEN_DIMENSION, golden_orbit(), partition, form,
                            prune=False)
            _expect_equal(plain.chern, pruned.chern, '{} form, {}'.format(form, partition))


def suite_names() -> t.List[str]:
    return list(SUITES) + ['all']


def run_suite(name: str, out: t.TextIO = sys.stdout, jobs: int = 1) -> t.Tuple[int, int]:
    """Run the fixtures of a suite, printing one line per fixture. Return (passed, failed)."""
    if name == 'all':
        selected = [item for suite in SUITES.values() for item in suite]
    elif name in SUITES:
        selected = SUITES[name]
    else:
        raise ValueError('unknown suite {!r}, expected one of {}'.format(name, suite_names()))
    passed = failed = 0
    for fixture_name, check in selected:
        try:
            if check.parallel:
                check(jobs)
            else:
                check()
        except Exception as err:  # pylint: disable=broad-except
            failed += 1
            out.write('{}FAIL{} {}: {}\n'.format(Fore.LIGHTRED_EX, Style.RESET_ALL, fixture_name,
                                                 err))
            _LOG.debug('fixture %r failed', fixture_name, exc_info=True)
        else:
            passed += 1
            out.write('{}PASS{} {}\n'.format(Fore.LIGHTGREEN_EX, Style.RESET_ALL, fixture_name))
    out.write('{}{} passed, {} failed{}\n'.format(Style.BRIGHT, passed, failed, Style.NORMAL))
    return passed, failed
