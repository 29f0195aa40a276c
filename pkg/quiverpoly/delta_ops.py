"""Delta-polynomials, straightening of fake Schur polynomials, and the C and Delta operations.

Chern symbols c_n^(i) stand for c_n(M_i* - E_i*) of a quiver vertex i, with c_0 = 1 and
c_n = 0 for n < 0. A Delta-polynomial of an integer sequence lam of length r is the determinant
det(c_{lam_s + j - s})_{s,j=1..r}; it is a Schur polynomial when lam is a partition.
"""

import collections
import functools
import logging
import typing as t

from .general.exc import MixedVertexSchurBasis
from .general.misc import trim_trailing
from .laurent import VarId, LaurentPoly

_LOG = logging.getLogger(__name__)

Partition = t.Tuple[int, ...]


def as_partition(parts: t.Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence of nonnegative integers and trim trailing zeros."""
    parts = tuple(int(_) for _ in parts)
    if any(part < 0 for part in parts) \
            or any(first < second for first, second in zip(parts, parts[1:])):
        raise ValueError('{} is not a partition'.format(parts))
    return trim_trailing(parts)


def _signed_sum(terms: t.Iterable[t.Tuple[int, str]]) -> str:
    """Render (coefficient, product text) pairs as "a - 2*b + 1"."""
    text = ''
    for coefficient, factors in terms:
        if not factors:
            term = str(abs(coefficient))
        elif abs(coefficient) == 1:
            term = factors
        else:
            term = '{}*{}'.format(abs(coefficient), factors)
        if not text:
            text = ('-' if coefficient < 0 else '') + term
        else:
            text += ' {} {}'.format('-' if coefficient < 0 else '+', term)
    return text or '0'


class ChernSymbol(t.NamedTuple):

    vertex: int
    degree: int

    def __str__(self):
        return 'c{}^({})'.format(self.degree, self.vertex)


ChernMonomial = t.Tuple[t.Tuple[ChernSymbol, int], ...]


def _monomial_sort_key(item: t.Tuple[ChernSymbol, int]):
    symbol, _ = item
    return symbol.vertex, -symbol.degree


def chern_monomial(symbols: t.Iterable[t.Tuple[ChernSymbol, int]]) -> ChernMonomial:
    """Canonical monomial: by vertex, then by degree descending; c_0 absorbed."""
    merged = collections.defaultdict(int)
    for symbol, power in symbols:
        assert symbol.degree >= 0, symbol
        if symbol.degree > 0 and power != 0:
            merged[symbol] += power
    return tuple(sorted(merged.items(), key=_monomial_sort_key))


class ChernBasisPoly:

    """Integer combination of monomials in Chern symbols c_n^(i), n >= 1."""

    def __init__(self, terms: t.Optional[t.Mapping[ChernMonomial, int]] = None):
        merged = collections.defaultdict(int)
        for monomial, coefficient in (terms or {}).items():
            merged[chern_monomial(monomial)] += coefficient
        self._terms = {monomial: c for monomial, c in merged.items() if c != 0}

    @classmethod
    def one(cls) -> 'ChernBasisPoly':
        return cls({(): 1})

    @classmethod
    def symbol(cls, vertex: int, degree: int) -> 'ChernBasisPoly':
        if degree < 0:
            return cls()
        return cls({((ChernSymbol(vertex, degree), 1),): 1})

    @property
    def terms(self) -> t.Dict[ChernMonomial, int]:
        return dict(self._terms)

    def items(self) -> t.List[t.Tuple[ChernMonomial, int]]:
        """Terms in canonical order: by degree descending, then by monomial."""
        return sorted(self._terms.items(), key=lambda item: (
            -self.monomial_degree(item[0]),
            [(s.vertex, -s.degree, -p) for s, p in item[0]]))

    @staticmethod
    def monomial_degree(monomial: ChernMonomial) -> int:
        return sum(symbol.degree * power for symbol, power in monomial)

    def degrees(self) -> t.Set[int]:
        return {self.monomial_degree(monomial) for monomial in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: 'ChernBasisPoly') -> 'ChernBasisPoly':
        if not isinstance(other, ChernBasisPoly):
            return NotImplemented
        terms = collections.defaultdict(int, self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] += coefficient
        return ChernBasisPoly(terms)

    def __neg__(self) -> 'ChernBasisPoly':
        return ChernBasisPoly({monomial: -c for monomial, c in self._terms.items()})

    def __sub__(self, other: 'ChernBasisPoly') -> 'ChernBasisPoly':
        return self + (-other)

    def __mul__(self, other) -> 'ChernBasisPoly':
        if isinstance(other, int):
            return ChernBasisPoly({monomial: other * c for monomial, c in self._terms.items()})
        if not isinstance(other, ChernBasisPoly):
            return NotImplemented
        terms = collections.defaultdict(int)
        for monomial_a, c_a in self._terms.items():
            for monomial_b, c_b in other._terms.items():
                terms[chern_monomial(monomial_a + monomial_b)] += c_a * c_b
        return ChernBasisPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = ChernBasisPoly.one() * other
        if not isinstance(other, ChernBasisPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return _signed_sum(
            (coefficient, '*'.join(str(symbol) if power == 1 else '{}^{}'.format(symbol, power)
                                   for symbol, power in monomial))
            for monomial, coefficient in self.items())

    def __repr__(self):
        return 'ChernBasisPoly({})'.format(self)


SchurKey = t.Tuple[Partition, ...]


class SchurBasisPoly:

    """Integer combination of products of Schur polynomials, one partition per vertex."""

    def __init__(self, n_vertices: int, terms: t.Optional[t.Mapping[SchurKey, int]] = None):
        self._n_vertices = n_vertices
        merged = collections.defaultdict(int)
        for key, coefficient in (terms or {}).items():
            if len(key) != n_vertices:
                raise ValueError('key {} does not have {} partitions'.format(key, n_vertices))
            merged[tuple(as_partition(_) for _ in key)] += coefficient
        self._terms = {key: c for key, c in merged.items() if c != 0}

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def terms(self) -> t.Dict[SchurKey, int]:
        return dict(self._terms)

    def items(self) -> t.List[t.Tuple[SchurKey, int]]:
        return sorted(self._terms.items(), key=lambda item: (
            -self.key_degree(item[0]), [tuple(-part for part in _) for _ in item[0]]))

    @staticmethod
    def key_degree(key: SchurKey) -> int:
        return sum(sum(partition) for partition in key)

    def to_chern(self) -> ChernBasisPoly:
        """Expand every Schur product by its Delta-polynomial determinants."""
        result = ChernBasisPoly()
        for key, coefficient in self._terms.items():
            product = ChernBasisPoly.one()
            for vertex, partition in enumerate(key, 1):
                product = product * delta_to_chern(partition, vertex)
            result = result + product * coefficient
        return result

    def negative_terms(self) -> t.List[t.Tuple[SchurKey, int]]:
        return [(key, c) for key, c in self.items() if c < 0]

    def __add__(self, other: 'SchurBasisPoly') -> 'SchurBasisPoly':
        if not isinstance(other, SchurBasisPoly):
            return NotImplemented
        assert self._n_vertices == other._n_vertices, (self, other)
        terms = collections.defaultdict(int, self._terms)
        for key, coefficient in other._terms.items():
            terms[key] += coefficient
        return SchurBasisPoly(self._n_vertices, terms)

    def __neg__(self) -> 'SchurBasisPoly':
        return SchurBasisPoly(self._n_vertices, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other: int) -> 'SchurBasisPoly':
        if not isinstance(other, int):
            return NotImplemented
        return SchurBasisPoly(self._n_vertices, {k: other * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SchurBasisPoly):
            return NotImplemented
        return (self._n_vertices, self._terms) == (other._n_vertices, other._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return _signed_sum(
            (coefficient, '*'.join(
                's^({})_{{{}}}'.format(vertex, ','.join(str(_) for _ in partition))
                for vertex, partition in enumerate(key, 1) if partition))
            for key, coefficient in self.items())

    def __repr__(self):
        return 'SchurBasisPoly({})'.format(self)


def straighten(lam: t.Sequence[int]) -> t.Optional[t.Tuple[int, Partition]]:
    """Rewrite Delta_lam as sign * Delta_p for a partition p, or return None when it vanishes.

    Uses the exchange Delta_(..,a,b,..) = -Delta_(..,b-1,a+1,..) on adjacent pairs with a < b.
    """
    sequence = list(lam)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(sequence) - 1):
            a, b = sequence[i], sequence[i + 1]
            if a >= b:
                continue
            if a + 1 == b:
                return None
            sequence[i], sequence[i + 1] = b - 1, a + 1
            sign = -sign
            changed = True
            break
    if sequence and sequence[-1] < 0:
        return None
    return sign, trim_trailing(sequence)


@functools.lru_cache(maxsize=None)
def _delta_determinant(lam: t.Tuple[int, ...], vertex: int) -> ChernBasisPoly:
    size = len(lam)
    if any(lam[s] < s + 1 - size for s in range(size)):
        return ChernBasisPoly()

    @functools.lru_cache(maxsize=None)
    def minor(row: int, columns: t.Tuple[int, ...]) -> ChernBasisPoly:
        if row == size:
            return ChernBasisPoly.one()
        result = ChernBasisPoly()
        for position, column in enumerate(columns):
            entry = ChernBasisPoly.symbol(vertex, lam[row] + column - row)
            if not entry:
                continue
            rest = minor(row + 1, columns[:position] + columns[position + 1:])
            result = result + entry * rest * (-1) ** position
        return result

    return minor(0, tuple(range(size)))


def delta_to_chern(lam: t.Sequence[int], vertex: int) -> ChernBasisPoly:
    """Exact Laplace expansion of det(c_{lam_s + j - s}^(vertex))."""
    return _delta_determinant(tuple(lam), vertex)


def C_op(p: LaurentPoly, vertex_of_alphabet: t.Mapping[int, int]) -> ChernBasisPoly:
    """Map every monomial prod u_ks^lam_ks to prod c_{lam_ks}^(i_k), extended linearly."""
    terms = collections.defaultdict(int)
    for exps, coefficient in p.items():
        if any(exponent < 0 for _, exponent in exps):
            continue
        monomial = chern_monomial(
            (ChernSymbol(vertex_of_alphabet[var.alphabet], exponent), 1) for var, exponent in exps)
        terms[monomial] += coefficient
    return ChernBasisPoly(terms)


class AlphabetLayout(t.NamedTuple):

    """Ordered variables forming one Delta-alphabet, evaluated with the symbols of a vertex."""

    vertex: int
    variables: t.Tuple[VarId, ...]

    def sequence(self, exponent_of: t.Mapping[VarId, int]) -> t.Tuple[int, ...]:
        return tuple(exponent_of.get(var, 0) for var in self.variables)


def alphabet_layouts(sizes: t.Sequence[int], vertex_of_alphabet: t.Mapping[int, int]
                     ) -> t.List[AlphabetLayout]:
    """One layout per alphabet k with variables u_k1..u_kr_k."""
    return [AlphabetLayout(vertex_of_alphabet[k], tuple(VarId(k, s) for s in range(1, r + 1)))
            for k, r in enumerate(sizes, 1)]


def _straightened_terms(p: LaurentPoly, layouts: t.Sequence[AlphabetLayout]):
    """Yield (coefficient, [(vertex, partition) per layout]) for terms that do not vanish."""
    known = {var for layout in layouts for var in layout.variables}
    for exps, coefficient in p.items():
        exponent_of = dict(exps)
        assert known.issuperset(exponent_of), (exps, layouts)
        factors = []
        for layout in layouts:
            straightened = straighten(layout.sequence(exponent_of))
            if straightened is None:
                break
            sign, partition = straightened
            coefficient *= sign
            factors.append((layout.vertex, partition))
        else:
            yield coefficient, factors


def delta_op(p: LaurentPoly, layouts: t.Sequence[AlphabetLayout]) -> ChernBasisPoly:
    """Map every monomial to the product of Delta-polynomials of its alphabets, in Chern basis."""
    result = collections.defaultdict(int)
    for coefficient, factors in _straightened_terms(p, layouts):
        product = ChernBasisPoly.one()
        for vertex, partition in factors:
            product = product * delta_to_chern(partition, vertex)
        for monomial, c in product.terms.items():
            result[monomial] += coefficient * c
    return ChernBasisPoly(result)


def delta_op_schur(p: LaurentPoly, layouts: t.Sequence[AlphabetLayout],
                   n_vertices: int) -> SchurBasisPoly:
    """Map every monomial to a product of straightened Schur polynomials, one per vertex.

    Raises MixedVertexSchurBasis when two alphabets of one vertex both carry nonempty partitions
    in some term, since their product is not a single Schur polynomial.
    """
    result = collections.defaultdict(int)
    for coefficient, factors in _straightened_terms(p, layouts):
        key = [()] * n_vertices
        for vertex, partition in factors:
            if not partition:
                continue
            if key[vertex - 1]:
                raise MixedVertexSchurBasis(
                    'vertex {} owns several alphabets with nonempty partitions {} and {}'
                    .format(vertex, key[vertex - 1], partition))
            key[vertex - 1] = partition
        result[tuple(key)] += coefficient
    return SchurBasisPoly(n_vertices, result)


def schur_to_chern(p: SchurBasisPoly) -> ChernBasisPoly:
    return p.to_chern()


def C_op_by_constant_term(p: LaurentPoly, vertex_of_alphabet: t.Mapping[int, int]
                          ) -> ChernBasisPoly:
    """Constant coefficient of p times prod_{k,s} sum_n c_n^(i_k) u_ks^-n.

    Every series is truncated at the largest exponent of its variable in p, beyond which it
    cannot reach the constant term. Agrees with C_op on every Laurent polynomial.
    """
    largest = collections.defaultdict(int)
    for exps, _ in p.items():
        for var, exponent in exps:
            largest[var] = max(largest[var], exponent)
    # products of truncated series, keyed by the negative exponents they carry
    series = {(): ChernBasisPoly.one()}
    for var in sorted(largest):
        vertex = vertex_of_alphabet[var.alphabet]
        extended = collections.defaultdict(ChernBasisPoly)
        for exps, value in series.items():
            for n in range(largest[var] + 1):
                key = exps + (((var, -n),) if n else ())
                extended[key] = extended[key] + value * ChernBasisPoly.symbol(vertex, n)
        series = extended
    result = ChernBasisPoly()
    for exps, coefficient in p.items():
        wanted = tuple((var, -exponent) for var, exponent in exps)
        if wanted in series:
            result = result + series[wanted] * coefficient
    return result
