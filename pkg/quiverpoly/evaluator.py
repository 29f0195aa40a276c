"""End-to-end computation of quiver polynomials in the C, Delta and vertex forms."""

import concurrent.futures
import logging
import typing as t

from .general.exc import ConstructionFailed, DimensionMismatch, SchurFormMissing, \
    VerificationMismatch
from .general.registry import Registry
from .delta_ops import ChernBasisPoly, SchurBasisPoly, SchurKey, AlphabetLayout, \
    alphabet_layouts, C_op, delta_op, delta_op_schur, delta_to_chern
from .laurent import VarId, GeneratingFunction, ExponentWindow, expand, prune_inert
from .orbits import OrbitLabel, validate_orbit, enumerate_orbits
from .resolution import DirectedPartition, ResolutionPair, verify_directed, \
    find_directed_partition, alternative_partitions, resolution_pair, \
    build_generating_function, build_vertex_generating_function, total_codim
from .rootsys import DynkinType, PositiveRoot, Quiver, standard_quiver

_LOG = logging.getLogger(__name__)

DEFAULT_FORM = 'vertex'

FORM_NAMES = ('c', 'delta', 'vertex')


class Provenance(t.NamedTuple):

    label: OrbitLabel
    partition: DirectedPartition
    pair: ResolutionPair
    form: str


class QuiverPolynomial(t.NamedTuple):

    """Class of an orbit closure, in Chern basis and optionally in Schur basis."""

    chern: ChernBasisPoly
    schur: t.Optional[SchurBasisPoly]
    degree: int
    provenance: Provenance


class Form(Registry):

    """Evaluation of the generating function of a resolution pair by one of the closed formulas."""

    name = None  # type: str

    def __init__(self, quiver: Quiver, prune: bool = True):
        self._quiver = quiver
        self._prune = prune

    def generating_function(self, pair: ResolutionPair) -> GeneratingFunction:
        raise NotImplementedError()

    def lower_bounds(self, pair: ResolutionPair) -> t.Dict[VarId, int]:
        raise NotImplementedError()

    def expansion(self, pair: ResolutionPair, degree: int):
        g = self.generating_function(pair)
        window = ExponentWindow(self.lower_bounds(pair), degree)
        if self._prune:
            g = prune_inert(g, window)
        expanded = expand(g, window)
        _LOG.debug('%s-form expansion: %i terms', self.name, len(expanded))
        return expanded

    def evaluate(self, pair: ResolutionPair, degree: int, schur: bool = False
                 ) -> t.Tuple[ChernBasisPoly, t.Optional[SchurBasisPoly]]:
        raise NotImplementedError()


class CForm(Form):

    name = 'c'

    def generating_function(self, pair):
        g, _ = build_generating_function(self._quiver, pair, 'c')
        return g

    def lower_bounds(self, pair):
        return {var: 0 for variables in pair.alphabets() for var in variables}

    def evaluate(self, pair, degree, schur=False):
        if schur:
            raise SchurFormMissing('Schur basis output is offered by the delta and vertex forms')
        return C_op(self.expansion(pair, degree), pair.vertex_of_alphabet()), None


class DeltaForm(Form):

    name = 'delta'

    def generating_function(self, pair):
        g, _ = build_generating_function(self._quiver, pair, 'delta')
        return g

    def lower_bounds(self, pair):
        return {var: var.slot - len(variables)
                for variables in pair.alphabets() for var in variables}

    def evaluate(self, pair, degree, schur=False):
        expanded = self.expansion(pair, degree)
        layouts = alphabet_layouts(pair.rr, pair.vertex_of_alphabet())
        chern = delta_op(expanded, layouts)
        if not schur:
            return chern, None
        return chern, delta_op_schur(expanded, layouts, self._quiver.n_vertices)


class VertexForm(Form):

    name = 'vertex'

    def generating_function(self, pair):
        g, _ = build_vertex_generating_function(self._quiver, pair)
        return g

    def lower_bounds(self, pair):
        return {var: position - len(variables)
                for variables in pair.vertex_alphabets(self._quiver.n_vertices).values()
                for position, var in enumerate(variables, 1)}

    def evaluate(self, pair, degree, schur=True):
        layouts = [AlphabetLayout(vertex, variables) for vertex, variables
                   in sorted(pair.vertex_alphabets(self._quiver.n_vertices).items())]
        result = delta_op_schur(self.expansion(pair, degree), layouts, self._quiver.n_vertices)
        return result.to_chern(), result


Form.register(CForm, ['c'])
Form.register(DeltaForm, ['delta'])
Form.register(VertexForm, ['vertex'])


def _checked_label(quiver: Quiver, e: t.Sequence[int], label: OrbitLabel) -> OrbitLabel:
    report = validate_orbit(quiver, e, label)
    if not report.ok:
        raise DimensionMismatch('orbit {} is invalid for dimension vector {}: {}'
                                .format(label, tuple(e), report))
    return label


def _checked_partition(quiver: Quiver, label: OrbitLabel,
                       partition: t.Optional[DirectedPartition]) -> DirectedPartition:
    if partition is None:
        return find_directed_partition(quiver, label.support())
    report = verify_directed(quiver, partition)
    if not report.ok:
        raise ConstructionFailed('supplied partition {} is not directed: {}'
                                 .format(partition, report.violations[0]))
    return partition


def compute(quiver: Quiver, e: t.Sequence[int], label: OrbitLabel,
            partition: t.Optional[DirectedPartition] = None, form: str = DEFAULT_FORM,
            prune: bool = True, schur: t.Optional[bool] = None,
            keep_zero: bool = True) -> QuiverPolynomial:
    """Class of the closure of the orbit with given label.

    The partition is found automatically when not given. Schur basis output is produced by
    default only by the vertex form.
    """
    form_class = Form.find(form)
    if form_class is None:
        raise ValueError('unknown form {!r}, expected one of {}'
                         .format(form, Form.registered_keys()))
    label = _checked_label(quiver, e, label)
    partition = _checked_partition(quiver, label, partition)
    pair = resolution_pair(quiver, label, partition, keep_zero)
    _, factors = build_generating_function(quiver, pair, 'delta')
    degree = total_codim(pair, factors)
    if schur is None:
        schur = form == 'vertex'
    _LOG.info('computing orbit %s in %s form, degree %i', label, form, degree)
    chern, schur_poly = form_class(quiver, prune).evaluate(pair, degree, schur)
    assert chern.degrees() <= {degree}, (chern, degree)
    return QuiverPolynomial(chern, schur_poly, degree, Provenance(label, partition, pair, form))


def compute_C_form(quiver, e, label, partition=None, prune=True) -> QuiverPolynomial:
    return compute(quiver, e, label, partition, 'c', prune)


def compute_Delta_form(quiver, e, label, partition=None, prune=True,
                       schur=False) -> QuiverPolynomial:
    return compute(quiver, e, label, partition, 'delta', prune, schur)


def compute_vertex_form(quiver, e, label, partition=None, prune=True) -> QuiverPolynomial:
    return compute(quiver, e, label, partition, 'vertex', prune)


def positivity_report(polynomial: QuiverPolynomial) -> t.List[t.Tuple[SchurKey, int]]:
    """Negative quiver coefficients; an empty list is consistent with nonnegativity."""
    if polynomial.schur is None:
        raise SchurFormMissing('polynomial of orbit {} carries no Schur basis form'
                               .format(polynomial.provenance.label))
    return polynomial.schur.negative_terms()


def orbit_codimension(quiver: Quiver, e: t.Sequence[int], label: OrbitLabel) -> int:
    label = _checked_label(quiver, e, label)
    pair = resolution_pair(quiver, label, find_directed_partition(quiver, label.support()))
    _, factors = build_generating_function(quiver, pair, 'delta')
    return total_codim(pair, factors)


A2 = DynkinType('A', 2)


def gtp_quiver() -> Quiver:
    return standard_quiver(A2)


def gtp_orbit(e1: int, e2: int, r: int) -> OrbitLabel:
    """Orbit of maps C^e1 -> C^e2 of rank e1 - r on the quiver 1 -> 2."""
    assert 0 <= r <= e1 <= e2, (e1, e2, r)
    return OrbitLabel(2, [(PositiveRoot((1, 1)), e1 - r), (PositiveRoot((1, 0)), r),
                          (PositiveRoot((0, 1)), e2 - e1 + r)])


def gtp_oracle(e1: int, e2: int, r: int) -> ChernBasisPoly:
    """Determinant det(c_{r+j-i}) of size e2 - e1 + r in the symbols of vertex 2."""
    assert 0 <= r <= e1 <= e2, (e1, e2, r)
    return delta_to_chern((r,) * (e2 - e1 + r), 2)


def verify(quiver: Quiver, e: t.Sequence[int], label: OrbitLabel,
           partition: t.Optional[DirectedPartition] = None, prune: bool = True
           ) -> t.Dict[str, QuiverPolynomial]:
    """Evaluate all forms on the partition and the vertex form on another machine-found one.

    Returns the results by name, or raises VerificationMismatch naming the disagreeing ones.
    """
    label = _checked_label(quiver, e, label)
    partition = _checked_partition(quiver, label, partition)
    results = {form: compute(quiver, e, label, partition, form, prune) for form in FORM_NAMES}
    for other in alternative_partitions(quiver, label.support()):
        if other != partition:
            results['vertex@{}'.format(other)] = compute(quiver, e, label, other, 'vertex', prune)
            break
    reference = results[DEFAULT_FORM].chern
    disagreeing = [name for name, result in results.items() if result.chern != reference]
    if disagreeing:
        raise VerificationMismatch('orbit {}: {} disagree with the vertex form {}'.format(
            label, ', '.join('{} = {}'.format(name, results[name].chern) for name in disagreeing),
            reference))
    _LOG.info('verified orbit %s across %s', label, ', '.join(results))
    return results


class SweepResult(t.NamedTuple):

    """Results of one orbit keyed by form and partition index, e.g. 'vertex/1'."""

    label: OrbitLabel
    partitions: t.Tuple[DirectedPartition, ...]
    results: t.Dict[str, QuiverPolynomial]

    @property
    def agree(self) -> bool:
        values = list(self.results.values())
        return all(value.chern == values[0].chern for value in values)


def sweep_partitions(quiver: Quiver, label: OrbitLabel,
                     extra: t.Sequence[DirectedPartition] = ()) -> t.Tuple[DirectedPartition, ...]:
    """Machine-found partitions of the orbit followed by the extra ones covering its support."""
    partitions = alternative_partitions(quiver, label.support())
    for partition in extra:
        if partition not in partitions and partition.covers(label.support()):
            partitions.append(partition)
    return tuple(partitions)


def _sweep_orbit(arguments) -> SweepResult:
    quiver, e, label, forms, extra = arguments
    partitions = sweep_partitions(quiver, label, extra)
    results = {}
    for index, partition in enumerate(partitions):
        for form in forms:
            results['{}/{}'.format(form, index)] = compute(quiver, e, label, partition, form)
    return SweepResult(label, partitions, results)


def sweep(quiver: Quiver, e: t.Sequence[int], forms: t.Sequence[str] = FORM_NAMES,
          partitions: t.Sequence[DirectedPartition] = (), jobs: int = 1
          ) -> t.List[SweepResult]:
    """Evaluate every orbit of a dimension vector, in canonical orbit order.

    Each orbit is evaluated on all its machine-found partitions and on those of the given
    partitions which cover its support.
    """
    tasks = [(quiver, tuple(e), label, tuple(forms), tuple(partitions))
             for label in enumerate_orbits(quiver, e)]
    _LOG.info('sweeping %i orbits of %s with %s over %i jobs', len(tasks), quiver, forms, jobs)
    if jobs <= 1:
        return [_sweep_orbit(task) for task in tasks]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_sweep_orbit, tasks))
