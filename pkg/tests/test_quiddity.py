import pytest

from polyfrieze.core.census import enumerate_triangulations
from polyfrieze.core.polygon.dissection import validate, trivial_dissection
from polyfrieze.core.polygon.parts import vertex_weights
from polyfrieze.core.quiddity import QuidditySequence, cc_weights, reconstruct, round_trip_check, integer_frieze, \
	NotATriangulation, NotAQuiddity
from polyfrieze.core.ring.element import make_ring


def test_cc_weights():
	assert cc_weights(trivial_dissection(3)) == QuidditySequence((1, 1, 1))
	q = cc_weights(validate(6, [(0, 2), (2, 5), (3, 5)]))
	assert q.entries == (2, 1, 3, 2, 1, 3)
	assert q.total == 12
	fan = validate(9, [(0, k) for k in range(2, 8)])
	assert cc_weights(fan).entries == (7, 1, 2, 2, 2, 2, 2, 2, 1)
	with pytest.raises(NotATriangulation):
		cc_weights(validate(5, [(0, 2)]))


def test_reconstruct():
	assert reconstruct(QuidditySequence((1, 1, 1))) == trivial_dissection(3)
	d = reconstruct(QuidditySequence((3, 1, 2, 2, 1)))
	assert d.diagonals == ((0, 2), (0, 3))
	assert cc_weights(d).entries == (3, 1, 2, 2, 1)


def test_reconstruct_rejects():
	for entries in [(2, 1, 3, 2, 1), (2, 2, 2, 2), (1, 1), (0, 1, 1), (1, 1, 2), (1, 2, 1, 2, 1)]:
		with pytest.raises(NotAQuiddity):
			reconstruct(QuidditySequence(entries))


def test_hexagon_quiddity_frieze():
	f = integer_frieze(QuidditySequence((1, 3, 2, 1, 3, 2)))
	rows = f.as_integers()
	assert rows[1] == (1, 3, 2, 1, 3, 2)
	assert rows[2] == (2, 5, 1, 2, 5, 1)


def test_parse():
	assert QuidditySequence.parse('1, 3,2') == QuidditySequence((1, 3, 2))
	assert str(QuidditySequence((1, 3, 2))) == '1,3,2'
	with pytest.raises(NotAQuiddity):
		QuidditySequence.parse('1,x,2')


def test_round_trip_all_small_triangulations():
	catalan = {3: 1, 4: 2, 5: 5, 6: 14, 7: 42, 8: 132, 9: 429}
	for m, count in catalan.items():
		triangulations = list(enumerate_triangulations(m))
		assert len(triangulations) == count
		for d in triangulations:
			q = cc_weights(d)
			assert q.total == 3 * (m - 2)
			assert round_trip_check(d), d
			assert cc_weights(reconstruct(q)) == q


def test_quiddity_is_degree_one_weights():
	ring = make_ring(3)
	for m in range(3, 8):
		for d in enumerate_triangulations(m):
			assert tuple(a.to_int() for a in vertex_weights(d, ring)) == cc_weights(d).entries
