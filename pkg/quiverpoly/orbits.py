"""Enumeration and validation of orbit labels of quiver representations."""

import logging
import typing as t

from .configuration import max_orbits
from .general.exc import DimensionMismatch, SearchSpaceTooLarge
from .general.misc import add_vectors
from .rootsys import Vector, PositiveRoot, Quiver, quiver_roots

_LOG = logging.getLogger(__name__)


class OrbitLabel:

    """Multiplicities m_alpha of positive roots; absent roots have multiplicity zero."""

    def __init__(self, n_vertices: int,
                 multiplicities: t.Union[t.Mapping[PositiveRoot, int],
                                         t.Iterable[t.Tuple[PositiveRoot, int]]] = ()):
        assert isinstance(n_vertices, int), type(n_vertices)
        if isinstance(multiplicities, dict):
            multiplicities = multiplicities.items()
        merged = {}
        for root, multiplicity in multiplicities:
            root = root if isinstance(root, PositiveRoot) else PositiveRoot(tuple(root))
            if len(root.d) != n_vertices:
                raise DimensionMismatch('root {} does not have {} coordinates'
                                        .format(root, n_vertices))
            if multiplicity < 0:
                raise DimensionMismatch('negative multiplicity {} of {}'.format(multiplicity, root))
            merged[root] = merged.get(root, 0) + multiplicity
        self._n_vertices = n_vertices
        self._items = tuple(sorted((root, m) for root, m in merged.items() if m != 0))

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    def items(self) -> t.Tuple[t.Tuple[PositiveRoot, int], ...]:
        """Sparse (root, multiplicity) pairs in root order."""
        return self._items

    def support(self) -> t.Tuple[PositiveRoot, ...]:
        return tuple(root for root, _ in self._items)

    def multiplicity(self, root: PositiveRoot) -> int:
        root = root if isinstance(root, PositiveRoot) else PositiveRoot(tuple(root))
        return dict(self._items).get(root, 0)

    def dimension_vector(self) -> Vector:
        total = (0,) * self._n_vertices
        for root, multiplicity in self._items:
            total = add_vectors(total, root.d, multiplicity)
        return total

    def is_zero(self) -> bool:
        return not self._items

    def __eq__(self, other):
        if not isinstance(other, OrbitLabel):
            return NotImplemented
        return (self._n_vertices, self._items) == (other._n_vertices, other._items)

    def __hash__(self):
        return hash((self._n_vertices, self._items))

    def __str__(self):
        if not self._items:
            return '0'
        return ' + '.join('{}*{}'.format(m, root) if m != 1 else str(root)
                          for root, m in self._items)

    def __repr__(self):
        return 'OrbitLabel({}, {!r})'.format(self._n_vertices, [(r.d, m) for r, m in self._items])


class OrbitViolation(t.NamedTuple):

    vertex: int
    expected: int
    actual: int


class OrbitReport(t.NamedTuple):

    """Outcome of checking sum_alpha m_alpha d(alpha) = e coordinate-wise."""

    violations: t.Tuple[OrbitViolation, ...]
    unknown_roots: t.Tuple[PositiveRoot, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unknown_roots


def _check_dimension(quiver: Quiver, e: t.Sequence[int]) -> Vector:
    e = tuple(e)
    if len(e) != quiver.n_vertices:
        raise DimensionMismatch('dimension vector {} given for {} vertices'
                                .format(e, quiver.n_vertices))
    if any(e_i < 0 for e_i in e):
        raise DimensionMismatch('dimension vector {} has negative entries'.format(e))
    return e


def validate_orbit(quiver: Quiver, e: t.Sequence[int], label: OrbitLabel) -> OrbitReport:
    e = _check_dimension(quiver, e)
    if label.n_vertices != quiver.n_vertices:
        raise DimensionMismatch('orbit label for {} vertices given for {}'
                                .format(label.n_vertices, quiver))
    roots = set(quiver_roots(quiver))
    unknown = tuple(root for root in label.support() if root not in roots)
    actual = label.dimension_vector()
    violations = tuple(OrbitViolation(vertex, e_i, a_i)
                       for vertex, (e_i, a_i) in enumerate(zip(e, actual), 1) if e_i != a_i)
    return OrbitReport(violations, unknown)


def orbit_from_sparse(quiver: Quiver, e: t.Sequence[int],
                      pairs: t.Iterable[t.Tuple[t.Sequence[int], int]]) -> OrbitLabel:
    """Build an orbit label and reject it unless it satisfies the orbit constraint."""
    label = OrbitLabel(quiver.n_vertices,
                       [(PositiveRoot(tuple(root)), int(m)) for root, m in pairs])
    report = validate_orbit(quiver, e, label)
    if report.unknown_roots:
        raise DimensionMismatch('not positive roots of {}: {}'.format(
            quiver, ', '.join(str(_) for _ in report.unknown_roots)))
    if report.violations:
        raise DimensionMismatch('orbit {} violates dimension vector {} at vertices {}'.format(
            label, tuple(e), [_.vertex for _ in report.violations]))
    return label


def enumerate_orbits(quiver: Quiver, e: t.Sequence[int],
                     cap: t.Optional[int] = None) -> t.List[OrbitLabel]:
    """All solutions m of sum_alpha m_alpha d(alpha) = e, depth-first in root order."""
    e = _check_dimension(quiver, e)
    if cap is None:
        cap = max_orbits()
    roots = quiver_roots(quiver)
    n = quiver.n_vertices
    # vertices still reachable by roots[j:]
    coverable = [set() for _ in range(len(roots) + 1)]
    for j in reversed(range(len(roots))):
        coverable[j] = coverable[j + 1] | set(roots[j].support())

    labels = []
    multiplicities = [0] * len(roots)

    def search(j: int, remaining: Vector) -> None:
        if all(r == 0 for r in remaining):
            if len(labels) >= cap:
                raise SearchSpaceTooLarge(
                    'more than {} orbits for {} and dimension vector {}'.format(cap, quiver, e))
            labels.append(OrbitLabel(n, [(roots[i], m) for i, m in enumerate(multiplicities)
                                         if m != 0 and i < j]))
            return
        if j == len(roots):
            return
        if any(r > 0 and vertex not in coverable[j]
               for vertex, r in enumerate(remaining, 1)):
            return
        root = roots[j]
        bound = min(remaining[i - 1] // root.d[i - 1] for i in root.support())
        for multiplicity in range(bound + 1):
            multiplicities[j] = multiplicity
            search(j + 1, add_vectors(remaining, root.d, -multiplicity))
        multiplicities[j] = 0

    search(0, e)
    _LOG.debug('%i orbits of %s with dimension vector %s', len(labels), quiver, e)
    return labels
