"""Directed partitions of positive roots, resolution pairs and their generating functions."""

import itertools
import logging
import typing as t

import networkx as nx
import ordered_set

from .general.exc import ConstructionFailed, DimensionMismatch
from .general.misc import add_vectors
from .general.registry import Registry
from .laurent import VarId, GeneratingFunction
from .orbits import OrbitLabel
from .rootsys import PositiveRoot, Quiver, euler_form, quiver_roots

_LOG = logging.getLogger(__name__)

EXHAUSTIVE_SEARCH_LIMIT = 12

MINIMAL_BLOCK_SIZE_LIMIT = 3


class DirectedPartition:

    """Ordered sequence of disjoint blocks of positive roots."""

    def __init__(self, blocks: t.Iterable[t.Iterable[PositiveRoot]]):
        self._blocks = tuple(
            tuple(sorted(root if isinstance(root, PositiveRoot) else PositiveRoot(tuple(root))
                         for root in block))
            for block in blocks)

    @property
    def blocks(self) -> t.Tuple[t.Tuple[PositiveRoot, ...], ...]:
        return self._blocks

    def roots(self) -> t.List[PositiveRoot]:
        return [root for block in self._blocks for root in block]

    def covers(self, roots: t.Iterable[PositiveRoot]) -> bool:
        return set(roots).issubset(self.roots())

    def __len__(self):
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other):
        if not isinstance(other, DirectedPartition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self):
        return hash(self._blocks)

    def __str__(self):
        return ' | '.join('{{{}}}'.format(', '.join(str(root) for root in block))
                          for block in self._blocks)

    def __repr__(self):
        return 'DirectedPartition({!r})'.format([[r.d for r in block] for block in self._blocks])


class DirectedViolation(t.NamedTuple):

    first_block: int
    second_block: int
    alpha: PositiveRoot
    beta: PositiveRoot
    value: int
    condition: str


class DirectedReport(t.NamedTuple):

    violations: t.Tuple[DirectedViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_directed(quiver: Quiver, partition: DirectedPartition) -> DirectedReport:
    """Check both sign conditions of a directed partition via the Euler form.

    Blocks are numbered from 1. A root occurring in two places is reported with value 0 and the
    condition 'disjoint'.
    """
    violations = []
    seen = {}
    for j, block in enumerate(partition.blocks, 1):
        for root in block:
            if root in seen:
                violations.append(DirectedViolation(seen[root], j, root, root, 0, 'disjoint'))
            seen.setdefault(root, j)
    for j, block in enumerate(partition.blocks, 1):
        for alpha, beta in itertools.permutations(block, 2):
            value = euler_form(quiver, alpha, beta)
            if value < 0:
                violations.append(DirectedViolation(j, j, alpha, beta, value, '<a,b> >= 0'))
    for (i, first), (j, second) in itertools.combinations(enumerate(partition.blocks, 1), 2):
        for alpha in first:
            for beta in second:
                value = euler_form(quiver, alpha, beta)
                if value < 0:
                    violations.append(DirectedViolation(i, j, alpha, beta, value, '<a,b> >= 0'))
                value = euler_form(quiver, beta, alpha)
                if value > 0:
                    violations.append(DirectedViolation(i, j, alpha, beta, value, '<b,a> <= 0'))
    return DirectedReport(tuple(violations))


class PartitionFinder(Registry):

    """Strategy constructing a directed partition of a set of positive roots."""

    def __init__(self, quiver: Quiver):
        self._quiver = quiver
        self._form = {}

    def euler(self, alpha: PositiveRoot, beta: PositiveRoot) -> int:
        key = alpha, beta
        if key not in self._form:
            self._form[key] = euler_form(self._quiver, alpha, beta)
        return self._form[key]

    def precedes_all(self, block: t.Sequence[PositiveRoot],
                     rest: t.Iterable[PositiveRoot]) -> bool:
        """True if block may be placed before every root of rest."""
        return all(self.euler(alpha, beta) >= 0 and self.euler(beta, alpha) <= 0
                   for alpha in block for beta in rest)

    def is_block(self, block: t.Sequence[PositiveRoot]) -> bool:
        return all(self.euler(alpha, beta) >= 0 for alpha, beta in itertools.permutations(block, 2))

    def singleton_candidates(self, remaining: t.Sequence[PositiveRoot]) -> t.List[PositiveRoot]:
        return [alpha for alpha in remaining
                if self.precedes_all([alpha], [beta for beta in remaining if beta != alpha])]

    def choose_singleton(self, candidates: t.Sequence[PositiveRoot]) -> PositiveRoot:
        return candidates[0]

    def minimal_block(self, remaining: t.Sequence[PositiveRoot]
                      ) -> t.Optional[t.Tuple[PositiveRoot, ...]]:
        limit = len(remaining) if len(remaining) <= EXHAUSTIVE_SEARCH_LIMIT \
            else MINIMAL_BLOCK_SIZE_LIMIT
        if limit == len(remaining):
            _LOG.warning('falling back to exhaustive block search among %i roots', len(remaining))
        for size in range(2, limit + 1):
            for block in itertools.combinations(remaining, size):
                rest = [beta for beta in remaining if beta not in block]
                if self.is_block(block) and self.precedes_all(block, rest):
                    return block
        return None

    def greedy_blocks(self, support: t.Iterable[PositiveRoot]
                      ) -> t.List[t.Tuple[PositiveRoot, ...]]:
        remaining = sorted(set(support))
        blocks = []
        while remaining:
            candidates = self.singleton_candidates(remaining)
            if candidates:
                block = (self.choose_singleton(candidates),)
            else:
                block = self.minimal_block(remaining)
                if block is None:
                    raise ConstructionFailed(
                        'no directed partition found for roots {} of {}; supply a partition'
                        ' manually'.format(', '.join(str(_) for _ in remaining), self._quiver))
            blocks.append(block)
            remaining = [beta for beta in remaining if beta not in block]
        return blocks

    def partition(self, support: t.Iterable[PositiveRoot]) -> DirectedPartition:
        return DirectedPartition(self.greedy_blocks(support))


class FirstRootPartitionFinder(PartitionFinder):

    """Sink extraction picking the first qualifying root in root order."""


class LastRootPartitionFinder(PartitionFinder):

    """Sink extraction picking the last qualifying root in root order."""

    def choose_singleton(self, candidates):
        return candidates[-1]


class CoarsePartitionFinder(PartitionFinder):

    """Sink extraction followed by merging of consecutive blocks that stay directed."""

    def partition(self, support):
        blocks = []
        for block in self.greedy_blocks(support):
            if blocks and self.is_block(blocks[-1] + block):
                blocks[-1] = blocks[-1] + block
            else:
                blocks.append(block)
        return DirectedPartition(blocks)


PartitionFinder.register(FirstRootPartitionFinder, ['greedy'])
PartitionFinder.register(LastRootPartitionFinder, ['greedy-last'])
PartitionFinder.register(CoarsePartitionFinder, ['coarse'])


def find_directed_partition(quiver: Quiver, support: t.Optional[t.Iterable[PositiveRoot]] = None,
                            strategy: str = 'greedy') -> DirectedPartition:
    """Construct and re-verify a directed partition covering the given roots (default: all)."""
    finder_class = PartitionFinder.find(strategy)
    if finder_class is None:
        raise ValueError('unknown partition strategy {!r}, expected one of {}'
                         .format(strategy, PartitionFinder.registered_keys()))
    if support is None:
        support = quiver_roots(quiver)
    partition = finder_class(quiver).partition(support)
    report = verify_directed(quiver, partition)
    if not report.ok:
        raise ConstructionFailed('strategy {!r} produced a partition violating {}; supply a'
                                 ' partition manually'.format(strategy, report.violations[0]))
    _LOG.info('directed partition (%s): %s', strategy, partition)
    return partition


def alternative_partitions(quiver: Quiver, support: t.Iterable[PositiveRoot]
                           ) -> t.List[DirectedPartition]:
    """Distinct machine-found partitions covering the support, in a fixed order."""
    support = sorted(set(support))
    partitions = []
    for roots in (support, list(quiver_roots(quiver))):
        for strategy in ('greedy', 'greedy-last', 'coarse'):
            partition = find_directed_partition(quiver, roots, strategy)
            if partition not in partitions:
                partitions.append(partition)
    return partitions


class ResolutionPair(t.NamedTuple):

    """Vertex sequence ii and rank sequence rr, with the lengths of per-block segments."""

    ii: t.Tuple[int, ...]
    rr: t.Tuple[int, ...]
    segments: t.Tuple[int, ...]

    def __len__(self):
        return len(self.ii)

    def vertex_of_alphabet(self) -> t.Dict[int, int]:
        return {k: i for k, i in enumerate(self.ii, 1)}

    def alphabets(self) -> t.List[t.Tuple[VarId, ...]]:
        """Variables u_k1..u_kr_k of every alphabet k."""
        return [tuple(VarId(k, s) for s in range(1, r + 1)) for k, r in enumerate(self.rr, 1)]

    def vertex_alphabets(self, n_vertices: int) -> t.Dict[int, t.Tuple[VarId, ...]]:
        """Concatenation X_i of the alphabets at each vertex, in alphabet order."""
        concatenated = {vertex: () for vertex in range(1, n_vertices + 1)}
        for k, variables in enumerate(self.alphabets(), 1):
            concatenated[self.ii[k - 1]] += variables
        return concatenated

    def check(self, quiver: Quiver) -> None:
        """Raise DimensionMismatch unless segments hold distinct vertices in topological order."""
        if len(self.ii) != len(self.rr) or sum(self.segments) != len(self.ii):
            raise DimensionMismatch('inconsistent resolution pair {}'.format(self))
        start = 0
        for length in self.segments:
            segment = self.ii[start:start + length]
            if len(set(segment)) != len(segment):
                raise DimensionMismatch('vertex repeated within segment {}'.format(segment))
            for tail, head in quiver.arrows:
                if tail in segment and head in segment \
                        and segment.index(tail) > segment.index(head):
                    raise DimensionMismatch('head {} precedes tail {} in segment {}'
                                            .format(head, tail, segment))
            start += length


def resolution_pair(quiver: Quiver, label: OrbitLabel, partition: DirectedPartition,
                    keep_zero: bool = True) -> ResolutionPair:
    """Resolution pair induced by a directed partition.

    Each block contributes the vertices of its roots' supports in topological order (lowest
    vertex first among the available ones), with ranks p_i = sum of m_alpha d_i(alpha).
    Zero ranks are kept unless keep_zero is False.
    """
    if not partition.covers(label.support()):
        raise DimensionMismatch('partition {} does not cover orbit {}'.format(partition, label))
    digraph = quiver.digraph()
    ii, rr, segments = [], [], []
    for block in partition.blocks:
        total = (0,) * quiver.n_vertices
        for root in block:
            total = add_vectors(total, root.d, label.multiplicity(root))
        vertices = sorted({vertex for root in block for vertex in root.support()})
        order = list(nx.lexicographical_topological_sort(digraph.subgraph(vertices)))
        entries = [(vertex, total[vertex - 1]) for vertex in order
                   if keep_zero or total[vertex - 1] != 0]
        if not entries:
            continue
        ii += [vertex for vertex, _ in entries]
        rr += [rank for _, rank in entries]
        segments.append(len(entries))
    pair = ResolutionPair(tuple(ii), tuple(rr), tuple(segments))
    _LOG.info('resolution pair: ii=%s rr=%s', pair.ii, pair.rr)
    return pair


class AlphabetFactors(t.NamedTuple):

    """B_k, C_k and n_k of one alphabet."""

    b: ordered_set.OrderedSet
    c: ordered_set.OrderedSet
    n: int


def factor_data(quiver: Quiver, pair: ResolutionPair) -> t.List[AlphabetFactors]:
    alphabets = pair.alphabets()
    data = []
    for k, vertex in enumerate(pair.ii):
        later = list(range(k + 1, len(pair.ii)))
        same = [l for l in later if pair.ii[l] == vertex]
        heads = [l for l in later if pair.ii[l] in quiver.heads(vertex)]
        tails = [l for l in later if pair.ii[l] in quiver.tails(vertex)]
        data.append(AlphabetFactors(
            ordered_set.OrderedSet(var for l in same for var in alphabets[l]),
            ordered_set.OrderedSet(var for l in heads for var in alphabets[l]),
            sum(pair.rr[l] for l in tails) - sum(pair.rr[l] for l in same)))
    return data


def total_codim(pair: ResolutionPair, factors: t.Sequence[AlphabetFactors]) -> int:
    """Degree sum_k r_k n_k of the monomial part."""
    return sum(r * data.n for r, data in zip(pair.rr, factors))


def _monomial(pair: ResolutionPair, factors: t.Sequence[AlphabetFactors]) -> t.Dict[VarId, int]:
    return {var: data.n for variables, data in zip(pair.alphabets(), factors)
            for var in variables}


def build_generating_function(quiver: Quiver, pair: ResolutionPair, form: str = 'delta'
                              ) -> t.Tuple[GeneratingFunction, t.List[AlphabetFactors]]:
    """Product of M_k I_k, with the discriminants D_k as well for the C-form."""
    if form not in ('c', 'delta'):
        raise ValueError('unknown form {!r}'.format(form))
    factors = factor_data(quiver, pair)
    binomials = []
    for variables, data in zip(pair.alphabets(), factors):
        if form == 'c':
            binomials += [((x, y), 1) for x, y in itertools.combinations(variables, 2)]
        for u in variables:
            binomials += [((u, x), 1) for x in data.b]
            binomials += [((u, x), -1) for x in data.c]
    g = GeneratingFunction(_monomial(pair, factors), binomials)
    _LOG.debug('%s-form generating function: %s', form, g)
    return g, factors


def interference_by_arrows(quiver: Quiver, pair: ResolutionPair) -> GeneratingFunction:
    """Product of all I_k written over vertex pairs and arrow pairs of alphabets."""
    alphabets = pair.alphabets()
    binomials = []
    for k, l in itertools.combinations(range(len(pair.ii)), 2):
        if pair.ii[k] == pair.ii[l]:
            multiplicity = 1
        elif (pair.ii[k], pair.ii[l]) in quiver.arrows:
            multiplicity = -1
        else:
            continue
        binomials += [((x, y), multiplicity) for x in alphabets[k] for y in alphabets[l]]
    return GeneratingFunction((), binomials)


def build_vertex_generating_function(quiver: Quiver, pair: ResolutionPair
                                     ) -> t.Tuple[GeneratingFunction, t.List[AlphabetFactors]]:
    """Product of M_k over the arrow interference factors only."""
    factors = factor_data(quiver, pair)
    alphabets = pair.alphabets()
    binomials = []
    for k, l in itertools.combinations(range(len(pair.ii)), 2):
        if (pair.ii[k], pair.ii[l]) in quiver.arrows:
            binomials += [((x, y), -1) for x in alphabets[k] for y in alphabets[l]]
    g = GeneratingFunction(_monomial(pair, factors), binomials)
    _LOG.debug('vertex-form generating function: %s', g)
    return g, factors
