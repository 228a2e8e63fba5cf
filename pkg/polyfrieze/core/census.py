"""
Exhaustive census of the dissections of small polygons
"""
import functools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Dict, Optional, Callable, Sequence, NamedTuple, Tuple, Iterable

from mcdreforged.api.utils.serializer import Serializable

from polyfrieze.common import constants
from polyfrieze.common.exceptions import FriezeError
from polyfrieze.common.logger import FriezeLogger
from polyfrieze.common.serializer import NoMissingFieldSerializable
from polyfrieze.core.frieze import ClosureFailure, generate, first_unimodular_defect, verify_positive, \
	first_row_below_two, pattern_period, verify_diagonal_insertion, FriezePattern
from polyfrieze.core.polygon.dissection import PolygonDissection, Diagonal, crosses
from polyfrieze.core.polygon.parts import WeightSequence, conductor, vertex_weights, find_ear_part
from polyfrieze.core.qpoly import q_recurrence, eval_in_ring
from polyfrieze.core.quiddity import cc_weights, round_trip_check
from polyfrieze.core.ring.element import RingElement, make_ring, embed_part_weight

__all__ = [
	'CapExceeded',
	'enumerate_dissections',
	'enumerate_triangulations',
	'CensusFailure',
	'CensusReport',
	'DissectionResult',
	'check_dissection',
	'DissectionCensus',
	'run_census',
]

WeightMutator = Callable[[PolygonDissection, WeightSequence], Sequence[RingElement]]


class CapExceeded(FriezeError, ValueError):
	pass


def _check_range(m: int, cap: int):
	if not 3 <= m <= cap:
		raise CapExceeded('Polygon size {} outside the census range 3..{}'.format(m, cap))


def _candidate_diagonals(m: int) -> List[Diagonal]:
	return [(a, b) for a in range(m) for b in range(a + 2, m) if (b - a) % m != m - 1]


def enumerate_dissections(m: int, *, cap: int = constants.DEFAULT_MAX_M_CAP) -> Iterator[PolygonDissection]:
	"""
	Every set of pairwise non-crossing diagonals once, the empty one included,
	in lexicographic order of the sorted diagonal lists
	"""
	_check_range(m, cap)
	candidates = _candidate_diagonals(m)
	chosen: List[Diagonal] = []

	def extend(start: int) -> Iterator[PolygonDissection]:
		yield PolygonDissection(m=m, diagonals=tuple(chosen))
		for k in range(start, len(candidates)):
			candidate = candidates[k]
			if not any(crosses(m, candidate, other) for other in chosen):
				chosen.append(candidate)
				yield from extend(k + 1)
				chosen.pop()

	return extend(0)


def enumerate_triangulations(m: int, *, cap: int = constants.DEFAULT_MAX_M_CAP) -> Iterator[PolygonDissection]:
	return (d for d in enumerate_dissections(m, cap=cap) if d.is_triangulation())


class CensusFailure(NoMissingFieldSerializable):
	diagonals: List[List[int]]
	property: str
	detail: str


class CensusReport(Serializable):
	m: int = 3
	dissection_count: int = 0
	triangulation_count: int = 0
	failures: List[CensusFailure] = []
	observed_periods: Dict[str, int] = {}  # pattern period -> number of dissections

	@property
	def passed(self) -> bool:
		return len(self.failures) == 0


class DissectionResult(NamedTuple):
	dissection: PolygonDissection
	period: Optional[int]  # None if the frieze did not close
	failures: List[Tuple[str, str]]  # (property, detail)


def _ring_text(values: Iterable[RingElement]) -> str:
	return str([list(a.coeffs) for a in values])


def _check_trivial_rows(d: PolygonDissection, pattern: FriezePattern) -> Optional[str]:
	weight = embed_part_weight(d.m, pattern.spec)
	for i in range(1, pattern.width + 1):
		expected = eval_in_ring(q_recurrence(i), weight)
		if any(a != expected for a in pattern.row(i)):
			return 'row {} is not constantly Q_{}(w_{})'.format(i, i, d.m)
	return None


def check_dissection(d: PolygonDissection, weight_mutator: Optional[WeightMutator] = None) -> DissectionResult:
	"""
	Build the frieze of d and check every census property on it, failures are returned, never raised
	"""
	failures: List[Tuple[str, str]] = []
	spec = make_ring(conductor(d))
	weights = vertex_weights(d, spec)
	first_row = tuple(weights if weight_mutator is None else weight_mutator(d, weights))
	try:
		pattern = generate(first_row)
	except ClosureFailure as e:
		failures.append(('closure', str(e)))
		return DissectionResult(d, None, failures)

	defect = first_unimodular_defect(pattern)
	if defect is not None:
		failures.append(('unimodular', 'diamond at row {}, column {}'.format(*defect)))
	if not verify_positive(pattern):
		failures.append(('positive', 'an entry of rows 1..{} is not positive'.format(pattern.width)))
	period = pattern_period(pattern)
	if d.m % period != 0:
		failures.append(('period_divides_m', 'period {} does not divide {}'.format(period, d.m)))
	if not first_row_below_two(pattern):
		failures.append(('first_row_below_two', 'every first row entry is >= 2'))

	if d.is_trivial():
		detail = _check_trivial_rows(d, pattern)
		if detail is not None:
			failures.append(('trivial_rows', detail))
	else:
		ear = find_ear_part(d)
		inserted = ear.inserted_row(vertex_weights(ear.cut, spec), embed_part_weight(ear.size, spec))
		if tuple(inserted) != first_row:
			failures.append(('ear_insertion', 'cut {} reinserted gives {}'.format(ear.cut, _ring_text(inserted))))
		if not verify_diagonal_insertion(d, pattern):
			failures.append(('diagonal_insertion', 'ear {} at cut position {}'.format(list(ear.part.vertices), ear.position)))

	if d.is_triangulation():
		if not pattern.is_integral():
			failures.append(('integer_entries', 'a triangulation frieze has a non-integer entry'))
		quiddity = cc_weights(d)
		if any(a != q for a, q in zip(first_row, quiddity.entries)):
			failures.append(('cc_weights_agree', 'quiddity {} against first row {}'.format(quiddity, _ring_text(first_row))))
		if not round_trip_check(d):
			failures.append(('quiddity_round_trip', 'quiddity {} is not reproduced'.format(quiddity)))
	return DissectionResult(d, period, failures)


class DissectionCensus:
	def __init__(
			self, *, cap: int = constants.DEFAULT_MAX_M_CAP, workers: int = 1,
			weight_mutator: Optional[WeightMutator] = None, logger: Optional[FriezeLogger] = None
	):
		self.cap = cap
		self.workers = max(1, workers)
		self.weight_mutator = weight_mutator
		self.logger = logger if logger is not None else FriezeLogger('Census')

	def __results(self, m: int) -> Iterator[DissectionResult]:
		check = functools.partial(check_dissection, weight_mutator=self.weight_mutator)
		dissections = enumerate_dissections(m, cap=self.cap)
		# a mutator always runs in process, it need not be picklable
		if self.workers == 1 or self.weight_mutator is not None:
			yield from map(check, dissections)
		else:
			self.logger.debug('Fanning out m = {} over {} worker processes'.format(m, self.workers))
			with ProcessPoolExecutor(max_workers=self.workers) as executor:
				yield from executor.map(check, dissections, chunksize=32)

	def run_m(self, m: int) -> CensusReport:
		report = CensusReport(m=m, dissection_count=0, triangulation_count=0, failures=[], observed_periods={})
		for result in self.__results(m):
			report.dissection_count += 1
			if result.dissection.is_triangulation():
				report.triangulation_count += 1
			if result.period is not None:
				key = str(result.period)
				report.observed_periods[key] = report.observed_periods.get(key, 0) + 1
			for name, detail in result.failures:
				self.logger.warning('{} failed {}: {}'.format(result.dissection, name, detail))
				report.failures.append(CensusFailure(
					diagonals=[list(diagonal) for diagonal in result.dissection.diagonals],
					property=name,
					detail=detail,
				))
		self.logger.info('m = {}: {} dissections, {} triangulations, {} failures'.format(
			m, report.dissection_count, report.triangulation_count, len(report.failures)
		))
		return report

	def run(self, m_max: int) -> List[CensusReport]:
		_check_range(m_max, self.cap)
		return [self.run_m(m) for m in range(3, m_max + 1)]


def run_census(
		m_max: int, *, cap: int = constants.DEFAULT_MAX_M_CAP, workers: int = 1,
		weight_mutator: Optional[WeightMutator] = None, logger: Optional[FriezeLogger] = None
) -> List[CensusReport]:
	census = DissectionCensus(cap=cap, workers=workers, weight_mutator=weight_mutator, logger=logger)
	return census.run(m_max)
