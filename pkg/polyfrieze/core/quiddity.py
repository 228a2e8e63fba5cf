"""
Integer friezes: triangulations and their quiddity sequences
"""
from typing import NamedTuple, Tuple, List

from polyfrieze.common.exceptions import FriezeError
from polyfrieze.core.frieze import FriezePattern, build_from_dissection
from polyfrieze.core.polygon.dissection import PolygonDissection, validate
from polyfrieze.core.polygon.parts import extract_parts

__all__ = [
	'NotATriangulation',
	'NotAQuiddity',
	'QuidditySequence',
	'cc_weights',
	'reconstruct',
	'round_trip_check',
	'integer_frieze',
]


class NotATriangulation(FriezeError, ValueError):
	pass


class NotAQuiddity(FriezeError, ValueError):
	pass


class QuidditySequence(NamedTuple):
	entries: Tuple[int, ...]

	@property
	def m(self) -> int:
		return len(self.entries)

	@property
	def total(self) -> int:
		return sum(self.entries)

	@classmethod
	def parse(cls, text: str) -> 'QuidditySequence':
		try:
			return cls(tuple(int(item) for item in text.split(',')))
		except ValueError:
			raise NotAQuiddity('{!r} is not a comma separated list of integers'.format(text)) from None

	def __str__(self):
		return ','.join(map(str, self.entries))


def cc_weights(d: PolygonDissection) -> QuidditySequence:
	counts = [0] * d.m
	for part in extract_parts(d):
		if part.size != 3:
			raise NotATriangulation('{} has a part of size {}: {}'.format(d, part.size, list(part.vertices)))
		for v in part.vertices:
			counts[v] += 1
	return QuidditySequence(tuple(counts))


def reconstruct(q: QuidditySequence) -> PolygonDissection:
	"""
	Clip ears until a triangle is left: a vertex of weight 1 goes away together with
	one triangle, its two neighbours lose one each and become joined by a diagonal
	"""
	if q.m < 3:
		raise NotAQuiddity('A quiddity sequence needs at least 3 entries, got {}'.format(q.m))
	if any(a < 1 for a in q.entries):
		raise NotAQuiddity('Entries must be positive integers, got {}'.format(q))
	values = list(q.entries)
	labels = list(range(q.m))
	diagonals: List[Tuple[int, int]] = []
	while len(values) > 3:
		if 1 not in values:
			raise NotAQuiddity('{} has no ear left after {} cuts, remaining {}'.format(q, len(diagonals), values))
		k = values.index(1)
		n = len(values)
		left, right = (k - 1) % n, (k + 1) % n
		if values[left] < 2 or values[right] < 2:
			raise NotAQuiddity('Cutting vertex {} of {} drops a neighbour below 1'.format(labels[k], q))
		values[left] -= 1
		values[right] -= 1
		diagonals.append((labels[left], labels[right]))
		del values[k]
		del labels[k]
	if values != [1, 1, 1]:
		raise NotAQuiddity('{} reduces to {} instead of the triangle 1,1,1'.format(q, values))
	return validate(q.m, diagonals)


def round_trip_check(d: PolygonDissection) -> bool:
	q = cc_weights(d)
	return cc_weights(reconstruct(q)) == q


def integer_frieze(q: QuidditySequence) -> FriezePattern:
	return build_from_dissection(reconstruct(q))
