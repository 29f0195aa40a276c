"""ADE root-system data and the Euler form of a quiver."""

import collections.abc
import functools
import logging
import typing as t

import networkx as nx

from .general.exc import NotDynkin, LabellingError, DimensionMismatch
from .general.misc import dict_mirror

_LOG = logging.getLogger(__name__)

Vector = t.Tuple[int, ...]

DYNKIN_FAMILIES = ('A', 'D', 'E')


class DynkinType(t.NamedTuple):

    """Simply-laced Dynkin type, for example A3, D4 or E8."""

    family: str
    rank: int

    @classmethod
    def from_str(cls, text: str) -> 'DynkinType':
        text = text.strip().upper()
        try:
            type_ = cls(text[0], int(text[1:]))
        except (IndexError, ValueError) as err:
            raise NotDynkin('{!r} does not name a Dynkin type'.format(text)) from err
        type_.validate()
        return type_

    def validate(self) -> None:
        if self.family not in DYNKIN_FAMILIES:
            raise NotDynkin('unsupported family {!r} in {}'.format(self.family, self))
        minimal_rank = {'A': 1, 'D': 4, 'E': 6}[self.family]
        if self.rank < minimal_rank or self.family == 'E' and self.rank > 8:
            raise NotDynkin('no diagram {}'.format(self))

    def __str__(self):
        return '{}{}'.format(self.family, self.rank)


class PositiveRoot(t.NamedTuple):

    """Positive root given by its coordinates d_i in the simple-root basis."""

    d: Vector

    @classmethod
    def simple(cls, vertex: int, n_vertices: int) -> 'PositiveRoot':
        return cls(tuple(int(i == vertex) for i in range(1, n_vertices + 1)))

    @property
    def height(self) -> int:
        return sum(self.d)

    def support(self) -> t.Tuple[int, ...]:
        """Vertices (1-based) where the root has nonzero coordinate."""
        return tuple(i for i, d_i in enumerate(self.d, 1) if d_i != 0)

    def __str__(self):
        return 'a[{}]'.format(','.join(str(_) for _ in self.d))


class Quiver:

    """Oriented graph on vertices 1..N, optionally with a labelling by Dynkin diagram nodes."""

    def __init__(self, n_vertices: int, arrows: t.Iterable[t.Tuple[int, int]],
                 labelling: t.Optional[t.Mapping[int, int]] = None):
        assert isinstance(n_vertices, int), type(n_vertices)
        if n_vertices < 1:
            raise NotDynkin('a quiver needs at least one vertex, got {}'.format(n_vertices))
        arrows = tuple((int(tail), int(head)) for tail, head in arrows)
        edges = set()
        for tail, head in arrows:
            if not 1 <= tail <= n_vertices or not 1 <= head <= n_vertices:
                raise DimensionMismatch(
                    'arrow {}->{} leaves vertex range 1..{}'.format(tail, head, n_vertices))
            if tail == head:
                raise NotDynkin('loop at vertex {}'.format(tail))
            edge = frozenset((tail, head))
            if edge in edges:
                raise NotDynkin('multiple arrows between vertices {} and {}'.format(tail, head))
            edges.add(edge)
        self._n_vertices = n_vertices
        self._arrows = arrows
        self._labelling = None if labelling is None \
            else tuple(sorted((int(k), int(v)) for k, v in labelling.items()))

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def arrows(self) -> t.Tuple[t.Tuple[int, int], ...]:
        return self._arrows

    @property
    def labelling(self) -> t.Optional[t.Dict[int, int]]:
        return None if self._labelling is None else dict(self._labelling)

    @property
    def vertices(self) -> range:
        return range(1, self._n_vertices + 1)

    def tails(self, vertex: int) -> t.FrozenSet[int]:
        """T(i): tails of arrows whose head is the given vertex."""
        return frozenset(tail for tail, head in self._arrows if head == vertex)

    def heads(self, vertex: int) -> t.FrozenSet[int]:
        """H(i): heads of arrows whose tail is the given vertex."""
        return frozenset(head for tail, head in self._arrows if tail == vertex)

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self._arrows)
        return graph

    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self._arrows)
        return graph

    def reversed(self) -> 'Quiver':
        return Quiver(self._n_vertices, [(head, tail) for tail, head in self._arrows],
                      self.labelling)

    def _key(self):
        return self._n_vertices, self._arrows, self._labelling

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        arrows = ', '.join('{}->{}'.format(tail, head) for tail, head in self._arrows)
        return 'Quiver({}; {})'.format(self._n_vertices, arrows)

    def __repr__(self):
        return 'Quiver({!r}, {!r}, {!r})'.format(self._n_vertices, self._arrows, self.labelling)


def standard_edges(type_: DynkinType) -> t.List[t.Tuple[int, int]]:
    """Edges of the Dynkin diagram in Bourbaki numbering, as pairs i < j."""
    type_.validate()
    n = type_.rank
    if type_.family == 'A':
        return [(i, i + 1) for i in range(1, n)]
    if type_.family == 'D':
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]


def standard_quiver(type_: DynkinType) -> Quiver:
    """Bourbaki-numbered quiver of given type with every edge oriented from lower to higher."""
    return Quiver(type_.rank, standard_edges(type_), {i: i for i in range(1, type_.rank + 1)})


def detect_dynkin_type(quiver: Quiver) -> DynkinType:
    """Classify the underlying unoriented graph of a quiver."""
    graph = quiver.graph()
    if not nx.is_connected(graph):
        raise NotDynkin('{} is disconnected'.format(quiver))
    if not nx.is_tree(graph):
        raise NotDynkin('{} contains a cycle'.format(quiver))
    degrees = dict(graph.degree())
    if max(degrees.values(), default=0) >= 4:
        raise NotDynkin('{} has a vertex of degree 4 or more'.format(quiver))
    branches = [vertex for vertex, degree in degrees.items() if degree == 3]
    if not branches:
        return DynkinType('A', quiver.n_vertices)
    if len(branches) > 1:
        raise NotDynkin('{} has {} branch vertices'.format(quiver, len(branches)))
    pruned = graph.copy()
    pruned.remove_node(branches[0])
    arms = tuple(sorted(len(component) for component in nx.connected_components(pruned)))
    _LOG.debug('arm lengths of %s: %s', quiver, arms)
    if arms[:2] == (1, 1):
        return DynkinType('D', arms[2] + 3)
    try:
        return {(1, 2, 2): DynkinType('E', 6), (1, 2, 3): DynkinType('E', 7),
                (1, 2, 4): DynkinType('E', 8)}[arms]
    except KeyError:
        raise NotDynkin('{} is a tree with arms {} not on the ADE list'.format(quiver, arms))


def _validate_labelling(quiver: Quiver, type_: DynkinType, labelling: t.Mapping[int, int]):
    if sorted(labelling) != list(quiver.vertices) \
            or sorted(labelling.values()) != list(range(1, type_.rank + 1)):
        raise LabellingError('labelling {} is not a bijection onto nodes of {}'
                             .format(labelling, type_))
    mapped = {frozenset((labelling[tail], labelling[head])) for tail, head in quiver.arrows}
    expected = {frozenset(edge) for edge in standard_edges(type_)}
    if mapped != expected:
        raise LabellingError('labelling {} does not map {} onto the {} diagram'
                             .format(labelling, quiver, type_))


def vertex_labelling(quiver: Quiver, type_: t.Optional[DynkinType] = None,
                     explicit: t.Optional[t.Mapping[int, int]] = None) -> t.Dict[int, int]:
    """Map each quiver vertex to the Bourbaki-numbered Dynkin node carrying its simple root.

    For type A the path order starting from the lower-numbered endpoint is used when no explicit
    labelling is given. D and E types require an explicit labelling.
    """
    if type_ is None:
        type_ = detect_dynkin_type(quiver)
    if explicit is None:
        explicit = quiver.labelling
    if explicit is not None:
        explicit = {int(k): int(v) for k, v in explicit.items()}
        _validate_labelling(quiver, type_, explicit)
        return explicit
    if type_.family != 'A':
        raise LabellingError(
            'quiver {} of type {} needs an explicit vertex labelling'.format(quiver, type_))
    graph = quiver.graph()
    start = min(vertex for vertex in graph.nodes if graph.degree(vertex) <= 1)
    order = list(nx.dfs_preorder_nodes(graph, source=start))
    return {vertex: node for node, vertex in enumerate(order, 1)}


@functools.lru_cache(maxsize=None)
def cartan_matrix(type_: DynkinType) -> t.Tuple[Vector, ...]:
    """Cartan matrix 2I - adjacency of the Bourbaki-numbered diagram."""
    n = type_.rank
    adjacent = {frozenset(edge) for edge in standard_edges(type_)}
    return tuple(
        tuple(2 if i == j else -int(frozenset((i, j)) in adjacent) for j in range(1, n + 1))
        for i in range(1, n + 1))


def simple_reflection(type_: DynkinType, node: int, root: Vector) -> Vector:
    """Apply the reflection in the simple root of given node (1-based) to a root vector."""
    row = cartan_matrix(type_)[node - 1]
    pairing = sum(c * d for c, d in zip(row, root))
    return tuple(d - pairing if i == node else d for i, d in enumerate(root, 1))


@functools.lru_cache(maxsize=None)
def _bourbaki_positive_roots(type_: DynkinType) -> t.Tuple[Vector, ...]:
    n = type_.rank
    simple = [PositiveRoot.simple(i, n).d for i in range(1, n + 1)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new_frontier = []
        for root in frontier:
            for node in range(1, n + 1):
                reflected = simple_reflection(type_, node, root)
                if any(_ < 0 for _ in reflected) or reflected in found:
                    continue
                found.add(reflected)
                new_frontier.append(reflected)
        frontier = new_frontier
    _LOG.debug('reflection closure of %s: %i positive roots', type_, len(found))
    return tuple(sorted(found))


def positive_roots(type_: DynkinType, labelling: t.Mapping[int, int]) -> t.List[PositiveRoot]:
    """All positive roots in quiver-vertex coordinates, in lexicographic order."""
    type_.validate()
    assert len(labelling) == type_.rank, (labelling, type_)
    vertex_of_node = dict_mirror(labelling)
    roots = []
    for root in _bourbaki_positive_roots(type_):
        coordinates = [0] * type_.rank
        for node, d_node in enumerate(root, 1):
            coordinates[vertex_of_node[node] - 1] = d_node
        roots.append(PositiveRoot(tuple(coordinates)))
    return sorted(roots)


@functools.lru_cache(maxsize=256)
def quiver_roots(quiver: Quiver) -> t.Tuple[PositiveRoot, ...]:
    """Positive roots of a quiver's detected type, using its labelling."""
    type_ = detect_dynkin_type(quiver)
    return tuple(positive_roots(type_, vertex_labelling(quiver, type_)))


def _coordinates(vector) -> Vector:
    if isinstance(vector, PositiveRoot):
        return vector.d
    assert isinstance(vector, collections.abc.Sequence), type(vector)
    return tuple(vector)


def euler_form(quiver: Quiver, e, f) -> int:
    """Euler form <e,f> = sum_i e_i f_i - sum_arrows e_tail f_head."""
    e = _coordinates(e)
    f = _coordinates(f)
    if len(e) != quiver.n_vertices or len(f) != quiver.n_vertices:
        raise DimensionMismatch('vectors of lengths {} and {} given for {} vertices'
                                .format(len(e), len(f), quiver.n_vertices))
    return sum(e_i * f_i for e_i, f_i in zip(e, f)) \
        - sum(e[tail - 1] * f[head - 1] for tail, head in quiver.arrows)
