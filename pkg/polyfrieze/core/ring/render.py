"""
Human readable ring elements

An element is written as a rational combination of products of part weights, e.g. "1+s+st"
with s = 2cos(pi/4) and t = 2cos(pi/5). When the weights do not span the element, it is
written as a polynomial in the generator c of the ring, annotated with the conductor
"""
import functools
import itertools
import re
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from sympy import Matrix, Rational, ilcm

from polyfrieze.core.ring.element import RingElement, RingSpec, embed_part_weight, part_weight_degree

__all__ = [
	'Generator',
	'default_generators',
	'render',
	'parse_rendered',
]

_ASCII_NAMES = {4: 's', 5: 't'}
_UNICODE_NAMES = {4: '√2', 6: '√3'}
_FALLBACK_NAME = 'c'
_FALLBACK_PATTERN = re.compile(r'\s*\[c=2cos\(pi/(\d+)\)\]\s*$')


class Generator(NamedTuple):
	name: str
	part_size: int


def default_generators(part_sizes: Iterable[int], *, unicode: bool = False) -> List[Generator]:
	"""
	Triangles are left out, their weight is 1
	"""
	generators = []
	for size in sorted(set(part_sizes)):
		if size == 3:
			continue
		name = _UNICODE_NAMES.get(size) if unicode else None
		generators.append(Generator(name or _ASCII_NAMES.get(size, 'g{}'.format(size)), size))
	return generators


def _separator(generators: Sequence[Generator]) -> str:
	return '·' if any(not g.name.isalnum() for g in generators) else ''


class _Basis(NamedTuple):
	labels: Tuple[str, ...]
	matrix: Matrix  # one column per independent monomial, in the power basis of c


@functools.lru_cache(maxsize=256)
def _monomial_basis(spec: RingSpec, generators: Tuple[Generator, ...]) -> _Basis:
	weights = [embed_part_weight(g.part_size, spec) for g in generators]
	ranges = [range(part_weight_degree(g.part_size)) for g in generators]
	exponents = sorted(itertools.product(*ranges), key=lambda e: (sum(e), tuple(-x for x in e)))
	separator = _separator(generators)
	labels = []
	columns = []
	for exps in exponents:
		value = spec.one()
		parts = []
		for gen, weight, e in zip(generators, weights, exps):
			if e > 0:
				value = value * weight ** e
				parts.append(gen.name if e == 1 else '{}^{}'.format(gen.name, e))
		labels.append(separator.join(parts))
		columns.append(list(value.coeffs))
	full = Matrix(columns).T
	_, pivots = full.rref()
	return _Basis(
		labels=tuple(labels[i] for i in pivots),
		matrix=Matrix([columns[i] for i in pivots]).T
	)


def _format_term(coeff: Rational, label: str) -> str:
	negative = coeff < 0
	magnitude = -coeff if negative else coeff
	if label == '':
		text = str(magnitude)
	elif magnitude == 1:
		text = label
	elif magnitude.q == 1:
		text = '{}{}'.format(magnitude, label)
	else:
		text = '({}){}'.format(magnitude, label)
	return ('-' if negative else '') + text


def _join_terms(terms: List[str]) -> str:
	if not terms:
		return '0'
	text = terms[0]
	for term in terms[1:]:
		text += term if term.startswith('-') else '+' + term
	return text


def _render_fallback(a: RingElement) -> str:
	terms = []
	for k in range(len(a.coeffs) - 1, -1, -1):
		if a.coeffs[k]:
			label = '' if k == 0 else (_FALLBACK_NAME if k == 1 else '{}^{}'.format(_FALLBACK_NAME, k))
			terms.append(_format_term(Rational(a.coeffs[k]), label))
	return '{} [c=2cos(pi/{})]'.format(_join_terms(terms), a.spec.conductor)


def render(a: RingElement, generators: Sequence[Generator] = ()) -> str:
	if a.is_integer():
		return str(a.coeffs[0])
	generators = tuple(generators)
	if generators:
		basis = _monomial_basis(a.spec, generators)
		try:
			solution, params = basis.matrix.gauss_jordan_solve(Matrix(list(a.coeffs)))
		except ValueError:
			pass
		else:
			if params.shape[0] == 0:
				terms = [_format_term(Rational(q), label) for q, label in zip(solution, basis.labels) if q != 0]
				return _join_terms(terms)
	return _render_fallback(a)


_TERM_PATTERN = re.compile(r'([+-]?)(\((\d+)/(\d+)\)|(\d+)(?:/(\d+))?)?(.*)')


def _parse_monomial(text: str, spec: RingSpec, names: dict) -> RingElement:
	value = spec.one()
	pattern = re.compile('({})(?:\\^(\\d+))?'.format('|'.join(re.escape(n) for n in sorted(names, key=len, reverse=True))))
	pos = 0
	while pos < len(text):
		if text[pos] in '·*':
			pos += 1
			continue
		match = pattern.match(text, pos) if names else None
		if match is None:
			raise ValueError('Unknown symbol at "{}"'.format(text[pos:]))
		value = value * names[match.group(1)] ** int(match.group(2) or 1)
		pos = match.end()
	return value


def parse_rendered(text: str, spec: RingSpec, generators: Sequence[Generator] = ()) -> RingElement:
	"""
	Inverse of :func:`render`
	"""
	fallback = _FALLBACK_PATTERN.search(text)
	if fallback is not None:
		if int(fallback.group(1)) != spec.conductor:
			raise ValueError('Rendered in Z[2cos(pi/{})], expected {}'.format(fallback.group(1), spec))
		text = text[:fallback.start()]
		names = {_FALLBACK_NAME: spec.generator()}
	else:
		names = {g.name: embed_part_weight(g.part_size, spec) for g in generators}
	text = text.replace(' ', '')
	if text == '':
		raise ValueError('Empty expression')
	terms: List[Tuple[Fraction, RingElement]] = []
	for raw in re.findall(r'[+-]?[^+-]+', text):
		match = _TERM_PATTERN.fullmatch(raw)
		sign, _, frac_num, frac_den, num, den, rest = match.groups()
		if frac_num is not None:
			coeff = Fraction(int(frac_num), int(frac_den))
		elif num is not None:
			coeff = Fraction(int(num), int(den or 1))
		else:
			coeff = Fraction(1)
		if sign == '-':
			coeff = -coeff
		terms.append((coeff, _parse_monomial(rest, spec, names)))
	if not terms:
		raise ValueError('No term in "{}"'.format(text))
	common = int(ilcm(*[c.denominator for c, _ in terms])) if len(terms) > 1 else terms[0][0].denominator
	total = spec.zero()
	for coeff, monomial in terms:
		total = total + monomial * int(coeff * common)
	if any(x % common for x in total.coeffs):
		raise ValueError('"{}" is not an element of {}'.format(text, spec))
	return spec.element([x // common for x in total.coeffs])
