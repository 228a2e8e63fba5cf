import pytest

from polyfrieze.common import constants
from polyfrieze.core.frieze import build_from_dissection, verify_positive, verify_unimodular
from polyfrieze.core.polygon.dissection import trivial_dissection
from polyfrieze.core.qpoly import q_recurrence, q_closed_form, eval_in_ring, check_weight_identities, common_roots, \
	alt_root_entries, IntPolynomial, PreconditionViolation
from polyfrieze.core.ring.element import make_ring, embed_part_weight
from polyfrieze.core.ring.sign import Sign


def test_first_polynomials():
	assert q_recurrence(0) == IntPolynomial([1])
	assert q_recurrence(1) == IntPolynomial([0, 1])
	assert q_recurrence(2).coeffs == (-1, 0, 1)
	assert q_recurrence(3).coeffs == (0, -2, 0, 1)
	assert q_recurrence(4).coeffs == (1, 0, -3, 0, 1)
	assert str(q_recurrence(3)) == 'x^3-2x'
	assert str(q_recurrence(4)) == 'x^4-3x^2+1'
	assert q_closed_form(1) == IntPolynomial([0, 1])
	with pytest.raises(PreconditionViolation):
		q_recurrence(-1)


def test_closed_form_matches_recurrence():
	for n in range(0, constants.CLOSED_FORM_MAX_N + 1):
		assert q_closed_form(n) == q_recurrence(n), n


def test_shape():
	for n in range(1, 40):
		q = q_recurrence(n)
		assert q.degree == n
		assert q.leading == 1
		assert q.is_parity_homogeneous()
		# Q_n(2) = n + 1
		assert q(2) == n + 1


def test_zero_polynomial():
	zero = IntPolynomial([0, 0])
	assert zero.coeffs == ()
	assert zero.degree == -1
	assert str(zero) == '0'


def test_eval_at_golden_ratio():
	t = make_ring(5).generator()
	assert eval_in_ring(q_recurrence(3), t) == 1
	assert eval_in_ring(q_recurrence(4), t) == 0


def test_weight_identities():
	for n in range(3, constants.DEFAULT_IDENTITY_MAX_N + 1):
		assert check_weight_identities(n) == (True, True), n
	with pytest.raises(PreconditionViolation):
		check_weight_identities(2)


def test_common_roots_are_odd_multiples():
	for n in range(3, 13):
		assert common_roots(n) == list(range(1, n, 2)), n
	assert 3 in common_roots(9)


def test_trivial_rows_are_q_values():
	for n in range(4, 11):
		pattern = build_from_dissection(trivial_dissection(n))
		weight = embed_part_weight(n, pattern.spec)
		for i in range(1, n - 2):
			expected = eval_in_ring(q_recurrence(i), weight)
			assert all(a == expected for a in pattern.row(i))


def test_alt_root_pentagon():
	report = alt_root_entries(5, 3)
	assert report.pattern.width == 2
	assert all(a == 1 for a in report.pattern.row(report.pattern.width + 1))
	assert all(a == 0 for a in report.pattern.row(report.pattern.width + 2))
	# 2cos(3pi/5) and its square minus one are both negative
	assert report.signs == ((Sign.NEGATIVE,) * 5,) * 2
	assert report.negative_count == 10
	assert verify_unimodular(report.pattern)
	assert not verify_positive(report.pattern)


def test_alt_root_heptagon():
	report = alt_root_entries(7, 3)
	assert report.negative_count > 0
	assert all(a == 1 for a in report.pattern.row(5))


def test_alt_root_preconditions():
	for n, k in [(5, 1), (5, 4), (5, 5), (6, 3), (9, 3), (7, 9)]:
		with pytest.raises(PreconditionViolation):
			alt_root_entries(n, k)
