"""
Frieze patterns in diagonal-major storage

E(i, j) is the i-th entry of the diagonal whose row-1 entry is a_j:
E(0, j) = 1, E(1, j) = a_j, E(i + 1, j) = a_{j+i} * E(i, j) - E(i - 1, j).
Rows run from the upper units (row 0) to the lower zeros (row width + 2);
E(i, j) sits at half-column 2j + i
"""
from typing import Tuple, List, Optional, Sequence

from sympy import divisors

from polyfrieze.common.exceptions import FriezeError
from polyfrieze.core.polygon.dissection import PolygonDissection, PolygonTooSmall
from polyfrieze.core.polygon.parts import conductor, vertex_weights, find_ear_part
from polyfrieze.core.ring.element import RingElement, RingSpec, make_ring
from polyfrieze.core.ring.sign import Sign, sign

__all__ = [
	'ClosureFailure',
	'IndexOutOfRange',
	'FriezePattern',
	'generate',
	'first_unimodular_defect',
	'verify_unimodular',
	'verify_positive',
	'first_row_below_two',
	'row',
	'display_row',
	'pattern_period',
	'row_period',
	'build_from_dissection',
	'verify_diagonal_insertion',
]


class ClosureFailure(FriezeError, ArithmeticError):
	def __init__(self, column: int, row_index: int, value: RingElement, diagonal: Sequence[RingElement]):
		super().__init__('Diagonal {} does not close: E({}, {}) = {}'.format(column, row_index, column, list(value.coeffs)))
		self.column = column
		self.row = row_index
		self.value = value
		self.diagonal = tuple(diagonal)


class IndexOutOfRange(FriezeError, IndexError):
	pass


class FriezePattern:
	__slots__ = ('m', 'width', 'spec', 'diagonals')

	def __init__(self, spec: RingSpec, diagonals: Sequence[Sequence[RingElement]]):
		self.m: int = len(diagonals)
		self.width: int = self.m - 3
		self.spec = spec
		self.diagonals: Tuple[Tuple[RingElement, ...], ...] = tuple(tuple(d) for d in diagonals)

	@property
	def row_count(self) -> int:
		return self.width + 3

	def entry(self, i: int, j: int) -> RingElement:
		if not 0 <= i < self.row_count:
			raise IndexOutOfRange('Row {} outside 0..{}'.format(i, self.row_count - 1))
		return self.diagonals[j % self.m][i]

	def row(self, i: int) -> Tuple[RingElement, ...]:
		return tuple(self.entry(i, j) for j in range(self.m))

	def rows(self) -> List[Tuple[RingElement, ...]]:
		return [self.row(i) for i in range(self.row_count)]

	def first_row(self) -> Tuple[RingElement, ...]:
		return self.row(1)

	def rotated(self, k: int) -> 'FriezePattern':
		k %= self.m
		return FriezePattern(self.spec, self.diagonals[k:] + self.diagonals[:k])

	def with_entry(self, i: int, j: int, value: RingElement) -> 'FriezePattern':
		self.entry(i, j)
		diagonals = [list(d) for d in self.diagonals]
		diagonals[j % self.m][i] = value
		return FriezePattern(self.spec, diagonals)

	def is_integral(self) -> bool:
		return all(x.is_integer() for d in self.diagonals for x in d)

	def as_integers(self) -> List[Tuple[int, ...]]:
		return [tuple(x.to_int() for x in r) for r in self.rows()]

	def __eq__(self, other) -> bool:
		if isinstance(other, FriezePattern):
			return self.spec.conductor == other.spec.conductor and self.diagonals == other.diagonals
		return NotImplemented

	def __hash__(self):
		return hash((self.spec.conductor, self.diagonals))

	def __repr__(self):
		return 'FriezePattern(m={}, width={}, ring={})'.format(self.m, self.width, self.spec)


def generate(first_row: Sequence[RingElement]) -> FriezePattern:
	a = list(first_row)
	m = len(a)
	if m < 3:
		raise PolygonTooSmall('A first row needs at least 3 entries, got {}'.format(m))
	spec = a[0].spec
	w = m - 3
	diagonals = []
	for j in range(m):
		diagonal = [spec.one(), a[j]]
		for i in range(1, w + 2):
			diagonal.append(a[(j + i) % m] * diagonal[i] - diagonal[i - 1])
		if diagonal[w + 1] != 1:
			raise ClosureFailure(j, w + 1, diagonal[w + 1], diagonal)
		if diagonal[w + 2] != 0:
			raise ClosureFailure(j, w + 2, diagonal[w + 2], diagonal)
		diagonals.append(diagonal)
	return FriezePattern(spec, diagonals)


def first_unimodular_defect(f: FriezePattern) -> Optional[Tuple[int, int]]:
	"""
	First (i, k) whose diamond, top E(i-1, k+1), left E(i, k), right E(i, k+1), bottom E(i+1, k),
	breaks left * right - top * bottom = 1
	"""
	for i in range(1, f.width + 2):
		for k in range(f.m):
			if f.entry(i, k) * f.entry(i, k + 1) - f.entry(i - 1, k + 1) * f.entry(i + 1, k) != 1:
				return i, k
	return None


def verify_unimodular(f: FriezePattern) -> bool:
	return first_unimodular_defect(f) is None


def verify_positive(f: FriezePattern) -> bool:
	return all(sign(f.entry(i, j)) == Sign.POSITIVE for i in range(1, f.width + 1) for j in range(f.m))


def first_row_below_two(f: FriezePattern) -> bool:
	"""
	Some first row entry is strictly less than 2
	"""
	return any(sign(a - 2) == Sign.NEGATIVE for a in f.first_row())


def row(f: FriezePattern, i: int) -> Tuple[RingElement, ...]:
	return f.row(i)


def display_row(f: FriezePattern, i: int) -> Tuple[RingElement, ...]:
	"""
	Row i in display order: rows of equal parity start at the same half-column
	"""
	shift = (i - 1) // 2
	return tuple(f.entry(i, k - shift) for k in range(f.m))


def pattern_period(f: FriezePattern) -> int:
	for p in divisors(f.m):
		if all(f.diagonals[j] == f.diagonals[(j + p) % f.m] for j in range(f.m)):
			return p
	return f.m


def row_period(f: FriezePattern, i: int) -> int:
	values = f.row(i)
	for p in divisors(f.m):
		if all(values[j] == values[(j + p) % f.m] for j in range(f.m)):
			return p
	return f.m


def build_from_dissection(d: PolygonDissection) -> FriezePattern:
	return generate(vertex_weights(d, make_ring(conductor(d))))


def verify_diagonal_insertion(d: PolygonDissection, pattern: Optional[FriezePattern] = None) -> bool:
	"""
	Cutting an ear of size r off d, a diagonal of the cut frieze that reaches the cut position p
	after delta >= 1 steps reappears in the full frieze with r - 2 entries inserted after step delta
	"""
	if pattern is None:
		pattern = build_from_dissection(d)
	ear = find_ear_part(d)
	cut_pattern = generate(vertex_weights(ear.cut, pattern.spec))
	s = ear.cut.m
	r = ear.size
	for j in range(s):
		delta = (ear.position - j) % s
		if not 1 <= delta <= s - 2:
			continue
		short = cut_pattern.diagonals[j]
		full = pattern.diagonals[ear.original_position(j)]
		if full[:delta + 1] != short[:delta + 1] or full[delta + r - 1:] != short[delta + 1:]:
			return False
	return True
