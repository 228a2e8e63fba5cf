from typing import Sequence

import pytest
from hypothesis import given, strategies as st

from polyfrieze.core.census import enumerate_dissections
from polyfrieze.core.frieze import generate, build_from_dissection, verify_unimodular, first_unimodular_defect, \
	verify_positive, first_row_below_two, pattern_period, row_period, row, display_row, verify_diagonal_insertion, \
	ClosureFailure, IndexOutOfRange
from polyfrieze.core.polygon.dissection import validate, trivial_dissection
from polyfrieze.core.polygon.parts import part_sizes, vertex_weights
from polyfrieze.core.ring.element import make_ring
from polyfrieze.core.ring.render import default_generators, render
from tests.settings import SLOW_SETTINGS

HEXAGON = validate(6, [(0, 2), (2, 5), (3, 5)])
PENTAGON = validate(5, [(0, 2)])
OCTAGON = validate(8, [(0, 4), (1, 4)])

OCTAGON_ROWS = [
	['1+t', '1+s', 's', 's', '1+s+t', 't', 't', 't'],
	['s+t+st', '1+s', '1', '1+s+st', '2t+st', 't', 't', '2t'],
	['1+t+st', '1', '1+t', 't+2st', '1+t+st', '1', '1+t', 't+2st'],
	['t', 't', '2t', 's+t+st', '1+s', '1', '1+s+st', '2t+st'],
	['t', 't', '1+t', '1+s', 's', 's', '1+s+t', 't'],
]


def _rendered(f, i: int, sizes: Sequence[int]):
	generators = default_generators(sizes)
	return [render(a, generators) for a in f.row(i)]


def _same_up_to_rotation(left: Sequence, right: Sequence) -> bool:
	return len(left) == len(right) and any(list(left[k:]) + list(left[:k]) == list(right) for k in range(len(left)))


def test_hexagon_triangulation():
	f = build_from_dissection(HEXAGON)
	assert f.spec.degree == 1
	assert f.is_integral()
	assert f.as_integers() == [
		(1, 1, 1, 1, 1, 1),
		(2, 1, 3, 2, 1, 3),
		(1, 2, 5, 1, 2, 5),
		(1, 3, 2, 1, 3, 2),
		(1, 1, 1, 1, 1, 1),
		(0, 0, 0, 0, 0, 0),
	]
	assert pattern_period(f) == 3
	assert display_row(f, 3) == row(f, 1)
	assert verify_unimodular(f)
	assert verify_positive(f)


def test_pentagon_with_square():
	f = build_from_dissection(PENTAGON)
	assert f.spec.conductor == 12
	assert _rendered(f, 1, [3, 4]) == ['1+s', '1', '1+s', 's', 's']
	assert _rendered(f, 2, [3, 4]) == ['s', 's', '1+s', '1', '1+s']
	assert _same_up_to_rotation(_rendered(f, 1, [3, 4]), ['s', 's', '1+s', '1', '1+s'])
	assert _same_up_to_rotation(_rendered(f, 2, [3, 4]), ['1', '1+s', 's', 's', '1+s'])


def test_pentagon_with_square_in_small_ring():
	ring = make_ring(4)
	f = generate(vertex_weights(PENTAGON, ring))
	s = ring.generator()
	assert f.row(1) == (1 + s, ring.one(), 1 + s, s, s)
	assert f.row(2) == (s, s, 1 + s, ring.one(), 1 + s)


def test_octagon_with_three_part_sizes():
	f = build_from_dissection(OCTAGON)
	assert f.spec.conductor == 60
	assert f.spec.degree == 16
	for i, expected in enumerate(OCTAGON_ROWS, start=1):
		assert _rendered(f, i, part_sizes(OCTAGON)) == expected, i
	assert all(a == 1 for a in f.row(6))
	assert all(a == 0 for a in f.row(7))
	assert pattern_period(f) == 8
	assert row_period(f, 3) == 4
	assert verify_unimodular(f)
	assert verify_positive(f)
	assert first_row_below_two(f)


def test_constant_two_does_not_close():
	ring = make_ring(3)
	for m in range(4, 11):
		with pytest.raises(ClosureFailure) as info:
			generate([ring.of_int(2)] * m)
		assert info.value.column == 0
		assert info.value.row == m - 2
		assert info.value.value == m - 1
		assert [a.to_int() for a in info.value.diagonal] == list(range(1, m + 1))


def test_short_row():
	with pytest.raises(ValueError):
		generate([make_ring(3).one()] * 2)


def test_triangle():
	f = build_from_dissection(trivial_dissection(3))
	assert f.width == 0
	assert f.as_integers() == [(1, 1, 1), (1, 1, 1), (0, 0, 0)]
	assert verify_unimodular(f)
	assert verify_positive(f)
	assert pattern_period(f) == 1


def test_rows_and_bounds():
	f = build_from_dissection(OCTAGON)
	assert all(a == 1 for a in row(f, 0))
	assert all(a == 0 for a in row(f, f.width + 2))
	with pytest.raises(IndexOutOfRange):
		row(f, -1)
	with pytest.raises(IndexOutOfRange):
		row(f, f.width + 3)
	with pytest.raises(IndexError):
		f.entry(9, 0)
	assert f.entry(2, 8) == f.entry(2, 0)


def test_display_row_alignment():
	f = build_from_dissection(OCTAGON)
	assert display_row(f, 1) == f.row(1)
	assert display_row(f, 2) == f.row(2)
	assert display_row(f, 3) == f.row(3)[-1:] + f.row(3)[:-1]


def test_perturbed_entry_breaks_unimodular_rule():
	f = build_from_dissection(HEXAGON)
	broken = f.with_entry(2, 0, f.entry(2, 0) + 1)
	assert not verify_unimodular(broken)
	assert first_unimodular_defect(broken) is not None
	assert verify_unimodular(f)


def test_trivial_pattern_period():
	for n in range(4, 10):
		assert pattern_period(build_from_dissection(trivial_dissection(n))) == 1


def test_diagonal_insertion_small_polygons():
	for m in range(4, 8):
		for d in enumerate_dissections(m):
			if not d.is_trivial():
				assert verify_diagonal_insertion(d), d


@given(
	d=st.integers(min_value=4, max_value=7).flatmap(lambda m: st.sampled_from(list(enumerate_dissections(m)))),
	k=st.integers(min_value=0, max_value=7),
)
@SLOW_SETTINGS
def test_generate_is_rotation_equivariant(d, k):
	f = build_from_dissection(d)
	weights = vertex_weights(d, f.spec)
	assert generate(weights.rotated(k)) == f.rotated(k)
	assert pattern_period(f) in [p for p in range(1, d.m + 1) if d.m % p == 0]
