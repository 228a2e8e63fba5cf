import math
from collections.abc import Sequence as SequenceABC
from typing import NamedTuple, Tuple, List, Dict, Set, Sequence, Iterator

from polyfrieze.core.polygon.dissection import PolygonDissection, Diagonal, NoEar, RingMismatch, validate
from polyfrieze.core.ring.element import RingElement, RingSpec, NotDivisor, embed_part_weight
from polyfrieze.core.ring.sign import Sign, sign

__all__ = [
	'Part',
	'WeightSequence',
	'EarCut',
	'extract_parts',
	'part_sizes',
	'conductor',
	'vertex_weights',
	'find_ear_part',
]


class Part(NamedTuple):
	vertices: Tuple[int, ...]  # counterclockwise, smallest vertex first

	@property
	def size(self) -> int:
		return len(self.vertices)

	def boundary(self) -> Iterator[Tuple[int, int]]:
		"""
		Directed boundary edges, counterclockwise
		"""
		for i, v in enumerate(self.vertices):
			yield v, self.vertices[(i + 1) % self.size]


class WeightSequence(SequenceABC):
	"""
	The cyclic first row w(v_0), ..., w(v_{m-1})
	"""
	__slots__ = ('entries',)

	def __init__(self, entries: Sequence[RingElement]):
		self.entries: Tuple[RingElement, ...] = tuple(entries)

	def __getitem__(self, index):
		return self.entries[index]

	def __len__(self) -> int:
		return len(self.entries)

	def __eq__(self, other) -> bool:
		if isinstance(other, WeightSequence):
			return self.entries == other.entries
		return NotImplemented

	def __hash__(self):
		return hash(self.entries)

	def __repr__(self):
		return 'WeightSequence({})'.format(list(self.entries))

	@property
	def spec(self) -> RingSpec:
		return self.entries[0].spec

	def rotated(self, k: int) -> 'WeightSequence':
		k %= len(self.entries)
		return WeightSequence(self.entries[k:] + self.entries[:k])

	def is_positive(self) -> bool:
		return all(sign(x) == Sign.POSITIVE for x in self.entries)


def _next_vertex(m: int, neighbours: Set[int], u: int, v: int) -> int:
	# the face left of u -> v continues along the last neighbour of v met before u, turning around v
	back = (u - v) % m
	return max((w for w in neighbours if (w - v) % m < back), key=lambda w: (w - v) % m)


def extract_parts(d: PolygonDissection) -> List[Part]:
	m = d.m
	neighbours: Dict[int, Set[int]] = {v: {(v - 1) % m, (v + 1) % m} for v in range(m)}
	starts: List[Tuple[int, int]] = [(v, (v + 1) % m) for v in range(m)]
	for a, b in d.diagonals:
		neighbours[a].add(b)
		neighbours[b].add(a)
		starts.extend([(a, b), (b, a)])
	visited: Set[Tuple[int, int]] = set()
	parts = []
	for start in starts:
		if start in visited:
			continue
		face = []
		u, v = start
		while (u, v) not in visited:
			visited.add((u, v))
			face.append(u)
			u, v = v, _next_vertex(m, neighbours[v], u, v)
		lowest = face.index(min(face))
		parts.append(Part(tuple(face[lowest:] + face[:lowest])))
	parts.sort()
	return parts


def part_sizes(d: PolygonDissection) -> List[int]:
	return [p.size for p in extract_parts(d)]


def conductor(d: PolygonDissection) -> int:
	"""
	lcm of the part sizes, all weights live in Z[2cos(pi/conductor)]
	"""
	return math.lcm(*part_sizes(d))


def vertex_weights(d: PolygonDissection, ring: RingSpec) -> WeightSequence:
	weights = [ring.zero()] * d.m
	for part in extract_parts(d):
		try:
			weight = embed_part_weight(part.size, ring)
		except NotDivisor as e:
			raise RingMismatch('Part {} of size {} has no weight in {}'.format(list(part.vertices), part.size, ring)) from e
		for v in part.vertices:
			weights[v] = weights[v] + weight
	return WeightSequence(weights)


class EarCut(NamedTuple):
	"""
	An ear part and the polygon left after cutting it off along its only diagonal

	The ear runs counterclockwise first, ..., last, closed by the diagonal last -> first.
	In the cut polygon first and last become neighbours at positions position, position + 1
	"""
	part: Part
	diagonal: Diagonal
	first: int
	last: int
	cut: PolygonDissection
	position: int
	labels: Tuple[int, ...]  # labels[q] is the original vertex of cut vertex q
	interior: Tuple[int, ...]  # removed vertices, counterclockwise

	@property
	def size(self) -> int:
		return self.part.size

	def original_position(self, q: int) -> int:
		return self.labels[q % len(self.labels)]

	def inserted_row(self, cut_row: Sequence[RingElement], weight: RingElement) -> List[RingElement]:
		"""
		Replace a_p, a_{p+1} of the cut row by a_p + t, t (r - 2 times), a_{p+1} + t,
		indexed by the original vertex labels
		"""
		row: List[RingElement] = [weight] * (len(self.labels) + len(self.interior))
		for q, v in enumerate(self.labels):
			row[v] = cut_row[q]
		row[self.first] = row[self.first] + weight
		row[self.last] = row[self.last] + weight
		return row


def _boundary_diagonals(part: Part, diagonals: Set[Diagonal]) -> List[Tuple[int, int]]:
	return [(u, v) for u, v in part.boundary() if (min(u, v), max(u, v)) in diagonals]


def find_ear_part(d: PolygonDissection) -> EarCut:
	parts = extract_parts(d)
	if len(parts) < 2:
		raise NoEar('The trivial dissection of the {}-gon has no ear'.format(d.m))
	diagonal_set = set(d.diagonals)
	# parts are sorted, so the first ear has the smallest lowest vertex
	for part in parts:
		on_boundary = _boundary_diagonals(part, diagonal_set)
		if len(on_boundary) == 1:
			break
	else:
		raise NoEar('No part of {} has exactly one diagonal on its boundary'.format(d))
	last, first = on_boundary[0]
	interior = tuple((first + k) % d.m for k in range(1, part.size - 1))
	removed = set(interior)
	labels = tuple(v for v in range(d.m) if v not in removed)
	relabel = {v: q for q, v in enumerate(labels)}
	cut = validate(len(labels), [(relabel[a], relabel[b]) for a, b in d.diagonals if (a, b) != (min(first, last), max(first, last))])
	return EarCut(
		part=part,
		diagonal=(min(first, last), max(first, last)),
		first=first,
		last=last,
		cut=cut,
		position=relabel[first],
		labels=labels,
		interior=interior,
	)
