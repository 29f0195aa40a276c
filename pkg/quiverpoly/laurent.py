"""Sparse exact Laurent polynomials and bounded expansion of iterated residue generating functions.

A generating function is a Laurent monomial times a product of binomial factors (1 - x/y)^k.
Denominator factors (k < 0) are always expanded in the range |x| << |y|, i.e. as geometric series
in x/y, which is well defined only when x belongs to an alphabet strictly before the alphabet of y.
"""

import collections
import collections.abc
import logging
import math
import typing as t

from .configuration import max_terms
from .general.exc import WindowUnsound, TermLimitExceeded

_LOG = logging.getLogger(__name__)


class VarId(t.NamedTuple):

    """Variable u_{ks}: slot s of alphabet k. Variables are ordered by alphabet, then slot."""

    alphabet: int
    slot: int

    def __str__(self):
        return 'u{}_{}'.format(self.alphabet, self.slot)


Exponents = t.Tuple[t.Tuple[VarId, int], ...]


def exponents(mapping: t.Union[t.Mapping[VarId, int], t.Iterable[t.Tuple[VarId, int]]] = ()
              ) -> Exponents:
    """Canonical sparse exponent vector: sorted pairs, zero exponents dropped."""
    if isinstance(mapping, collections.abc.Mapping):
        mapping = mapping.items()
    merged = collections.defaultdict(int)
    for var, exponent in mapping:
        merged[var] += exponent
    return tuple(sorted((var, exponent) for var, exponent in merged.items() if exponent != 0))


def multiply_exponents(first: Exponents, second: Exponents) -> Exponents:
    return exponents(first + second)


def monomial_str(exps: Exponents) -> str:
    if not exps:
        return '1'
    return '*'.join(str(var) if exponent == 1 else '{}^{}'.format(var, exponent)
                    for var, exponent in exps)


class LaurentPoly:

    """Finite map from sparse exponent vectors to nonzero integer coefficients."""

    def __init__(self, terms: t.Optional[t.Mapping[Exponents, int]] = None):
        self._terms = {}
        if terms is None:
            return
        for exps, coefficient in terms.items():
            exps = exponents(exps)
            self._terms[exps] = self._terms.get(exps, 0) + coefficient
        self._terms = {exps: c for exps, c in self._terms.items() if c != 0}

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls({(): 1})

    @classmethod
    def monomial(cls, mapping: t.Mapping[VarId, int], coefficient: int = 1) -> 'LaurentPoly':
        return cls({exponents(mapping): coefficient})

    @property
    def terms(self) -> t.Dict[Exponents, int]:
        return dict(self._terms)

    def items(self) -> t.List[t.Tuple[Exponents, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items())

    def coefficient(self, mapping) -> int:
        return self._terms.get(exponents(mapping), 0)

    def variables(self) -> t.Set[VarId]:
        return {var for exps in self._terms for var, _ in exps}

    def degrees(self) -> t.Set[int]:
        return {sum(exponent for _, exponent in exps) for exps in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def restrict(self, window: 'ExponentWindow') -> 'LaurentPoly':
        """Keep only the terms inside the window."""
        return LaurentPoly({exps: c for exps, c in self._terms.items() if window.contains(exps)})

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for exps, coefficient in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coefficient
        return LaurentPoly(terms)

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def __mul__(self, other) -> 'LaurentPoly':
        if isinstance(other, int):
            return LaurentPoly({exps: other * c for exps, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one() * other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join('{}*{}'.format(c, monomial_str(exps)) for exps, c in self.items())

    def __repr__(self):
        return 'LaurentPoly({!r})'.format(dict(self.items()))


def mul(first: LaurentPoly, second: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    terms = collections.defaultdict(int)
    for exps_a, c_a in first.terms.items():
        for exps_b, c_b in second.terms.items():
            terms[multiply_exponents(exps_a, exps_b)] += c_a * c_b
    return LaurentPoly(terms)


Factor = t.Tuple[VarId, VarId]


class GeneratingFunction:

    """Monomial times a multiset of binomial factors (1 - x/y)^multiplicity."""

    def __init__(self, monomial: t.Union[Exponents, t.Mapping[VarId, int]] = (),
                 factors: t.Union[t.Mapping[Factor, int],
                                  t.Iterable[t.Tuple[Factor, int]]] = ()):
        if isinstance(factors, collections.abc.Mapping):
            factors = factors.items()
        merged = collections.defaultdict(int)
        for (x, y), multiplicity in factors:
            assert isinstance(x, VarId) and isinstance(y, VarId), (x, y)
            if x == y:
                raise WindowUnsound('degenerate factor (1 - {0}/{0})'.format(x))
            merged[x, y] += multiplicity
        self._monomial = exponents(monomial)
        self._factors = tuple(sorted((pair, m) for pair, m in merged.items() if m != 0))

    @property
    def monomial(self) -> Exponents:
        return self._monomial

    @property
    def factors(self) -> t.Tuple[t.Tuple[Factor, int], ...]:
        return self._factors

    def numerator_factors(self) -> t.List[t.Tuple[Factor, int]]:
        return [(pair, m) for pair, m in self._factors if m > 0]

    def denominator_factors(self) -> t.List[t.Tuple[Factor, int]]:
        return [(pair, -m) for pair, m in self._factors if m < 0]

    def variables(self) -> t.Set[VarId]:
        variables = {var for var, _ in self._monomial}
        for (x, y), _ in self._factors:
            variables.update((x, y))
        return variables

    @property
    def degree(self) -> int:
        return sum(exponent for _, exponent in self._monomial)

    def without_variables(self, variables: t.Iterable[VarId]) -> 'GeneratingFunction':
        """Drop every factor which involves any of the given variables."""
        variables = set(variables)
        return GeneratingFunction(self._monomial, [
            (pair, m) for pair, m in self._factors if not variables.intersection(pair)])

    def __mul__(self, other: 'GeneratingFunction') -> 'GeneratingFunction':
        if not isinstance(other, GeneratingFunction):
            return NotImplemented
        return GeneratingFunction(multiply_exponents(self._monomial, other._monomial),
                                  self._factors + other._factors)

    def __eq__(self, other):
        if not isinstance(other, GeneratingFunction):
            return NotImplemented
        return (self._monomial, self._factors) == (other._monomial, other._factors)

    def __hash__(self):
        return hash((self._monomial, self._factors))

    def __str__(self):
        factors = ''.join('(1-{}/{})^{}'.format(x, y, m) for (x, y), m in self._factors)
        return '{}{}'.format(monomial_str(self._monomial), factors)

    def __repr__(self):
        return 'GeneratingFunction({!r}, {!r})'.format(self._monomial, self._factors)


class ExponentWindow:

    """Lower exponent bounds per variable together with the total degree of all terms."""

    def __init__(self, lower: t.Mapping[VarId, int], total_degree: int):
        self._lower = dict(lower)
        self._total_degree = total_degree
        self._lower_sum = sum(self._lower.values())
        if self._lower_sum > total_degree:
            raise ValueError('window lower bounds sum to {} above total degree {}'
                             .format(self._lower_sum, total_degree))

    @property
    def total_degree(self) -> int:
        return self._total_degree

    @property
    def variables(self) -> t.Set[VarId]:
        return set(self._lower)

    def lower(self, var: VarId) -> int:
        return self._lower[var]

    def upper(self, var: VarId) -> int:
        """Derived bound: total_degree minus the lower bounds of all other variables."""
        return self._total_degree - (self._lower_sum - self._lower[var])

    def contains(self, exps: Exponents) -> bool:
        exponent_of = dict(exps)
        if any(var not in self._lower for var in exponent_of):
            return False
        if sum(exponent_of.values()) != self._total_degree:
            return False
        return all(exponent_of.get(var, 0) >= lower for var, lower in self._lower.items())

    def __repr__(self):
        return 'ExponentWindow({!r}, {!r})'.format(dict(sorted(self._lower.items())),
                                                   self._total_degree)


def _series_coefficient(multiplicity: int, n: int) -> int:
    """Coefficient of (x/y)^n in (1 - x/y)^multiplicity."""
    if multiplicity > 0:
        if n > multiplicity:
            return 0
        return (-1) ** n * math.comb(multiplicity, n)
    k = -multiplicity
    return math.comb(n + k - 1, k - 1)


def _normalized_factors(g: GeneratingFunction) -> t.Tuple[Exponents, int, t.List]:
    """Rewrite numerator factors so that x < y everywhere and check denominator ordering."""
    monomial = dict(g.monomial)
    sign = 1
    factors = []
    for (x, y), multiplicity in g.factors:
        if multiplicity < 0:
            if x.alphabet >= y.alphabet:
                raise WindowUnsound(
                    'denominator factor (1 - {}/{}) does not pair an earlier alphabet with a'
                    ' strictly later one'.format(x, y))
            factors.append(((x, y), multiplicity))
        elif x < y:
            factors.append(((x, y), multiplicity))
        else:
            # (1 - x/y)^k = (-x/y)^k (1 - y/x)^k
            sign *= (-1) ** multiplicity
            monomial[x] = monomial.get(x, 0) + multiplicity
            monomial[y] = monomial.get(y, 0) - multiplicity
            factors.append(((y, x), multiplicity))
    return exponents(monomial), sign, factors


def expand(g: GeneratingFunction, window: ExponentWindow) -> LaurentPoly:
    """Exactly the expansion terms of g lying inside the window.

    Factors are grouped by their larger variable y and consumed group by group in decreasing
    variable order. Within the group of y, the exponent of y only decreases and x exponents only
    increase, so a term is discarded as soon as y drops below its lower bound or the lower bounds
    can no longer fit into the total degree.
    """
    if g.degree != window.total_degree:
        raise ValueError('generating function of degree {} given window of total degree {}'
                         .format(g.degree, window.total_degree))
    missing = g.variables() - window.variables
    if missing:
        raise WindowUnsound('window does not bound variables {}'.format(
            ', '.join(str(_) for _ in sorted(missing))))
    monomial, sign, factors = _normalized_factors(g)

    variables = sorted(window.variables)
    index = {var: i for i, var in enumerate(variables)}
    lower = [window.lower(var) for var in variables]
    upper = [window.upper(var) for var in variables]
    total = window.total_degree
    limit = max_terms()

    groups = collections.defaultdict(list)
    for (x, y), multiplicity in factors:
        groups[index[y]].append((index[x], multiplicity))
    group_order = sorted(groups, reverse=True)
    # variable i is final once the last group touching it is consumed
    last_group = {}
    for y_i in group_order:
        for x_i, _ in groups[y_i]:
            last_group[x_i] = y_i
        last_group[y_i] = y_i

    start = [0] * len(variables)
    for var, exponent in monomial:
        start[index[var]] = exponent
    pending = set(group_order)

    def fits(exps) -> bool:
        return sum(low if i in pending else max(low, exps[i])
                   for i, low in enumerate(lower)) <= total

    def finalize(terms, finished) -> dict:
        return {exps: c for exps, c in terms.items()
                if all(exps[i] >= lower[i] for i in finished)}

    terms = {tuple(start): sign} if fits(start) else {}
    terms = finalize(terms, [i for i in range(len(variables)) if i not in last_group])
    _LOG.debug('expanding %s: %i factor groups, %i variables', g, len(group_order),
               len(variables))
    for y_i in group_order:
        for x_i, multiplicity in groups[y_i]:
            expanded = collections.defaultdict(int)
            for exps, coefficient in terms.items():
                n = 0
                while True:
                    if multiplicity > 0 and n > multiplicity:
                        break
                    if exps[y_i] - n < lower[y_i]:
                        break
                    new_exps = list(exps)
                    new_exps[x_i] += n
                    new_exps[y_i] -= n
                    # x exponents never decrease once x has no pending group
                    if x_i not in pending and new_exps[x_i] > upper[x_i]:
                        break
                    if not fits(new_exps):
                        break
                    expanded[tuple(new_exps)] += coefficient * _series_coefficient(
                        multiplicity, n)
                    n += 1
            terms = {exps: c for exps, c in expanded.items() if c != 0}
            if len(terms) > limit:
                raise TermLimitExceeded('{} intermediate terms exceed the limit of {}'
                                        .format(len(terms), limit))
        pending.discard(y_i)
        terms = finalize(terms, [i for i, group in last_group.items() if group == y_i])
        _LOG.debug('after factors of %s: %i terms', variables[y_i], len(terms))

    result = LaurentPoly({
        tuple((variables[i], exponent) for i, exponent in enumerate(exps) if exponent != 0): c
        for exps, c in terms.items()})
    assert all(window.contains(exps) for exps, _ in result.items()), result
    return result


def _inert_variables(g: GeneratingFunction, window: ExponentWindow) -> t.Set[VarId]:
    in_x_slot = {x for (x, _), _ in g.factors}
    in_monomial = {var for var, _ in g.monomial}
    return {y for (_, y), _ in g.factors
            if y not in in_x_slot and y not in in_monomial and window.lower(y) >= 0}


def prune_inert(g: GeneratingFunction, window: ExponentWindow) -> GeneratingFunction:
    """Remove all factors of variables which can only contribute through the constant term 1.

    A variable is inert when its lower bound is nonnegative, it is absent from the monomial, and
    it occurs only as the large variable y of factors (1 - x/y)^k. Every nonconstant expansion
    term of such factors carries a negative power of it, so none survives the window.
    Removal is repeated until no variable qualifies.
    """
    missing = g.variables() - window.variables
    if missing:
        raise WindowUnsound('window does not bound variables {}'.format(
            ', '.join(str(_) for _ in sorted(missing))))
    while True:
        inert = _inert_variables(g, window)
        if not inert:
            return g
        _LOG.debug('pruning inert variables %s', ', '.join(str(_) for _ in sorted(inert)))
        g = g.without_variables(inert)
