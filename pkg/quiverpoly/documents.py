"""Encoding of quivers, orbits, partitions and polynomials as JSON documents."""

import logging
import typing as t

from .general.exc import DocumentError, QuiverPolyError
from .general.misc import parse_int_sequence
from .delta_ops import ChernSymbol, ChernBasisPoly, SchurBasisPoly
from .orbits import OrbitLabel, enumerate_orbits, orbit_from_sparse
from .resolution import DirectedPartition, ResolutionPair
from .rootsys import PositiveRoot, Quiver

__all__ = [
    'parse_quiver', 'encode_quiver', 'parse_dimension', 'parse_orbit', 'encode_orbit',
    'parse_partition', 'encode_partition', 'encode_pair', 'encode_chern', 'parse_chern',
    'encode_schur', 'parse_schur', 'encode_roots']

_LOG = logging.getLogger(__name__)


def _expect(condition: bool, message: str, *args) -> None:
    if not condition:
        raise DocumentError(message.format(*args))


def _int(value, what: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), '{} must be an integer,'
            ' got {!r}', what, value)
    return value


def _int_list(value, what: str) -> t.Tuple[int, ...]:
    _expect(isinstance(value, list), '{} must be a list of integers, got {!r}', what, value)
    return tuple(_int(_, what) for _ in value)


def parse_quiver(document) -> Quiver:
    """Quiver from {"vertices": N, "arrows": [[tail, head], ...], "dynkin_labelling": ...}.

    The labelling may be an object mapping vertices to Bourbaki nodes or a list of such pairs.
    """
    _expect(isinstance(document, dict), 'quiver document must be an object, got {!r}', document)
    unknown = set(document) - {'vertices', 'arrows', 'dynkin_labelling'}
    _expect(not unknown, 'unknown quiver fields {}', sorted(unknown))
    _expect('vertices' in document and 'arrows' in document,
            'quiver document needs "vertices" and "arrows"')
    n_vertices = _int(document['vertices'], 'vertices')
    _expect(isinstance(document['arrows'], list), 'arrows must be a list')
    arrows = []
    for arrow in document['arrows']:
        arrow = _int_list(arrow, 'arrow')
        _expect(len(arrow) == 2, 'arrow must be a [tail, head] pair, got {}', list(arrow))
        arrows.append(arrow)
    labelling = document.get('dynkin_labelling')
    if labelling is not None:
        try:
            pairs = labelling.items() if isinstance(labelling, dict) else labelling
            labelling = {int(vertex): int(node) for vertex, node in pairs}
        except (TypeError, ValueError) as err:
            raise DocumentError('malformed dynkin_labelling {!r}'.format(labelling)) from err
    return Quiver(n_vertices, arrows, labelling)


def encode_quiver(quiver: Quiver) -> dict:
    document = {'vertices': quiver.n_vertices, 'arrows': [list(_) for _ in quiver.arrows]}
    if quiver.labelling is not None:
        document['dynkin_labelling'] = {str(k): v for k, v in sorted(quiver.labelling.items())}
    return document


def parse_dimension(document, quiver: Quiver) -> t.Tuple[int, ...]:
    if isinstance(document, str):
        try:
            document = list(parse_int_sequence(document))
        except ValueError as err:
            raise DocumentError('malformed dimension vector {!r}'.format(document)) from err
    e = _int_list(document, 'dimension vector')
    _expect(len(e) == quiver.n_vertices, 'dimension vector {} given for {} vertices',
            list(e), quiver.n_vertices)
    return e


def parse_orbit(document, quiver: Quiver, e: t.Sequence[int]) -> OrbitLabel:
    """Orbit from an index into the canonical enumeration or sparse [[root, m], ...] pairs."""
    if isinstance(document, int) and not isinstance(document, bool):
        orbits = enumerate_orbits(quiver, e)
        _expect(0 <= document < len(orbits), 'orbit index {} outside 0..{}', document,
                len(orbits) - 1)
        return orbits[document]
    if isinstance(document, dict) and 'orbit' in document:
        document = document['orbit']
    _expect(isinstance(document, list), 'orbit must be an index or a list of [root, m] pairs')
    pairs = []
    for pair in document:
        _expect(isinstance(pair, list) and len(pair) == 2, 'malformed orbit entry {!r}', pair)
        pairs.append((_int_list(pair[0], 'root'), _int(pair[1], 'multiplicity')))
    return orbit_from_sparse(quiver, e, pairs)


def encode_orbit(label: OrbitLabel) -> list:
    return [[list(root.d), m] for root, m in label.items()]


def parse_partition(document, quiver: Quiver) -> DirectedPartition:
    """Partition from a list of blocks of root coordinate vectors, or {"blocks": [...]}."""
    if isinstance(document, dict):
        _expect('blocks' in document, 'partition object needs "blocks"')
        document = document['blocks']
    _expect(isinstance(document, list), 'partition must be a list of blocks')
    blocks = []
    for block in document:
        _expect(isinstance(block, list), 'partition block must be a list, got {!r}', block)
        roots = [PositiveRoot(_int_list(root, 'root')) for root in block]
        for root in roots:
            _expect(len(root.d) == quiver.n_vertices, 'root {} given for {} vertices',
                    list(root.d), quiver.n_vertices)
        blocks.append(roots)
    return DirectedPartition(blocks)


def encode_partition(partition: DirectedPartition) -> list:
    return [[list(root.d) for root in block] for block in partition.blocks]


def encode_pair(pair: ResolutionPair) -> dict:
    return {'ii': list(pair.ii), 'rr': list(pair.rr), 'segments': list(pair.segments)}


def encode_roots(roots: t.Iterable[PositiveRoot]) -> list:
    return [list(root.d) for root in roots]


def encode_chern(polynomial: ChernBasisPoly) -> list:
    return [[[{'vertex': symbol.vertex, 'degree': symbol.degree, 'multiplicity': power}
              for symbol, power in monomial], coefficient]
            for monomial, coefficient in polynomial.items()]


def parse_chern(document) -> ChernBasisPoly:
    _expect(isinstance(document, list), 'Chern polynomial must be a list of terms')
    terms = {}
    for term in document:
        _expect(isinstance(term, list) and len(term) == 2, 'malformed Chern term {!r}', term)
        monomial, coefficient = term
        _expect(isinstance(monomial, list), 'malformed Chern monomial {!r}', monomial)
        symbols = []
        for factor in monomial:
            _expect(isinstance(factor, dict)
                    and set(factor) == {'vertex', 'degree', 'multiplicity'},
                    'malformed Chern factor {!r}', factor)
            degree = _int(factor['degree'], 'degree')
            _expect(degree >= 0, 'negative Chern degree in {!r}', factor)
            symbols.append((ChernSymbol(_int(factor['vertex'], 'vertex'), degree),
                            _int(factor['multiplicity'], 'multiplicity')))
        key = tuple(symbols)
        terms[key] = terms.get(key, 0) + _int(coefficient, 'coefficient')
    return ChernBasisPoly(terms)


def encode_schur(polynomial: SchurBasisPoly) -> list:
    return [[[list(partition) for partition in key], coefficient]
            for key, coefficient in polynomial.items()]


def parse_schur(document, n_vertices: int) -> SchurBasisPoly:
    _expect(isinstance(document, list), 'Schur polynomial must be a list of terms')
    terms = {}
    for term in document:
        _expect(isinstance(term, list) and len(term) == 2, 'malformed Schur term {!r}', term)
        key, coefficient = term
        _expect(isinstance(key, list) and len(key) == n_vertices,
                'Schur term {!r} needs one partition per each of {} vertices', key, n_vertices)
        key = tuple(_int_list(partition, 'partition') for partition in key)
        terms[key] = terms.get(key, 0) + _int(coefficient, 'coefficient')
    try:
        return SchurBasisPoly(n_vertices, terms)
    except ValueError as err:
        if isinstance(err, QuiverPolyError):
            raise
        raise DocumentError(str(err)) from err
