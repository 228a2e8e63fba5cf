from typing import NamedTuple, Tuple, Iterable, Sequence, Optional, Dict

from polyfrieze.common.exceptions import FriezeError

__all__ = [
	'Diagonal',
	'DissectionError',
	'PolygonTooSmall',
	'OutOfRange',
	'AdjacentEndpoints',
	'Crossing',
	'Duplicate',
	'NoEar',
	'RingMismatch',
	'PolygonDissection',
	'crosses',
	'validate',
	'trivial_dissection',
	'rotate_dissection',
	'reflect_dissection',
]

Diagonal = Tuple[int, int]


class DissectionError(FriezeError, ValueError):
	def __init__(self, message: str, *, index: Optional[int] = None):
		"""
		:param index: position of the offending diagonal in the input list, if any
		"""
		super().__init__(message)
		self.index = index


class PolygonTooSmall(DissectionError):
	pass


class OutOfRange(DissectionError):
	pass


class AdjacentEndpoints(DissectionError):
	pass


class Crossing(DissectionError):
	def __init__(self, diagonal: Diagonal, other: Diagonal, *, index: int, other_index: int):
		super().__init__('Diagonal {}-{} crosses {}-{}'.format(*diagonal, *other), index=index)
		self.diagonal = diagonal
		self.other = other
		self.other_index = other_index


class Duplicate(DissectionError):
	pass


class NoEar(DissectionError):
	pass


class RingMismatch(DissectionError):
	pass


class PolygonDissection(NamedTuple):
	"""
	A convex m-gon, vertices 0..m-1 counterclockwise, with non-crossing diagonals

	Build it with :func:`validate`; diagonals are (min, max) pairs in sorted order
	"""
	m: int
	diagonals: Tuple[Diagonal, ...]

	@property
	def width(self) -> int:
		return self.m - 3

	def is_trivial(self) -> bool:
		return len(self.diagonals) == 0

	def is_triangulation(self) -> bool:
		return len(self.diagonals) == self.m - 3

	def polygon_edges(self) -> Tuple[Diagonal, ...]:
		return tuple(_normalize(i, (i + 1) % self.m) for i in range(self.m))

	def __str__(self):
		return '{}: {}'.format(self.m, ', '.join('{}-{}'.format(a, b) for a, b in self.diagonals))


def _normalize(a: int, b: int) -> Diagonal:
	return (a, b) if a < b else (b, a)


def _in_open_arc(m: int, x: int, a: int, b: int) -> bool:
	"""
	x lies strictly inside the counterclockwise walk from a to b
	"""
	return 0 < (x - a) % m < (b - a) % m


def crosses(m: int, first: Diagonal, second: Diagonal) -> bool:
	a, b = first
	c, d = second
	if len({a, b, c, d}) < 4:
		return False
	return _in_open_arc(m, c, a, b) != _in_open_arc(m, d, a, b)


def validate(m: int, diagonals: Iterable[Sequence[int]]) -> PolygonDissection:
	if m < 3:
		raise PolygonTooSmall('A polygon needs at least 3 vertices, got {}'.format(m))
	accepted: Dict[Diagonal, int] = {}
	for index, pair in enumerate(diagonals):
		if len(pair) != 2:
			raise DissectionError('Diagonal #{} must have 2 endpoints, got {}'.format(index, list(pair)), index=index)
		a, b = pair
		if not (0 <= a < m and 0 <= b < m):
			raise OutOfRange('Diagonal {}-{} leaves the vertex range 0..{}'.format(a, b, m - 1), index=index)
		if (b - a) % m in (0, 1, m - 1):
			raise AdjacentEndpoints('{}-{} joins equal or adjacent vertices of the {}-gon'.format(a, b, m), index=index)
		diagonal = _normalize(a, b)
		if diagonal in accepted:
			raise Duplicate('Diagonal {}-{} is given twice (first as #{})'.format(a, b, accepted[diagonal]), index=index)
		for other, other_index in accepted.items():
			if crosses(m, diagonal, other):
				raise Crossing(diagonal, other, index=index, other_index=other_index)
		accepted[diagonal] = index
	return PolygonDissection(m=m, diagonals=tuple(sorted(accepted)))


def trivial_dissection(m: int) -> PolygonDissection:
	return validate(m, ())


def rotate_dissection(d: PolygonDissection, k: int) -> PolygonDissection:
	return validate(d.m, [((a + k) % d.m, (b + k) % d.m) for a, b in d.diagonals])


def reflect_dissection(d: PolygonDissection) -> PolygonDissection:
	return validate(d.m, [((-a) % d.m, (-b) % d.m) for a, b in d.diagonals])
