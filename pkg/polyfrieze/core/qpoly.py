"""
The polynomials Q_0 = 1, Q_1 = x, Q_n = x * Q_{n-1} - Q_{n-2}

Row i of the frieze of a polygon left undivided, with part weight t, is constantly Q_i(t)
"""
import functools
import math
from typing import NamedTuple, Sequence, Tuple, List

from polyfrieze.common.exceptions import FriezeError
from polyfrieze.core.frieze import FriezePattern, generate
from polyfrieze.core.ring.cyclotomic import IntCoeffs, poly_trim, poly_add, poly_shift, poly_scale
from polyfrieze.core.ring.element import RingElement, make_ring, embed_cos_multiple
from polyfrieze.core.ring.sign import Sign, sign

__all__ = [
	'PreconditionViolation',
	'NoNegativeEntry',
	'IntPolynomial',
	'q_recurrence',
	'q_closed_form',
	'eval_in_ring',
	'check_weight_identities',
	'common_roots',
	'AltRootReport',
	'alt_root_entries',
]


class PreconditionViolation(FriezeError, ValueError):
	pass


class NoNegativeEntry(FriezeError, AssertionError):
	pass


class IntPolynomial:
	__slots__ = ('coeffs',)

	def __init__(self, coeffs: Sequence[int] = ()):
		self.coeffs: IntCoeffs = poly_trim(coeffs)

	@property
	def degree(self) -> int:
		return len(self.coeffs) - 1

	@property
	def leading(self) -> int:
		return self.coeffs[-1] if self.coeffs else 0

	def is_parity_homogeneous(self) -> bool:
		"""
		Only powers with the parity of the degree occur
		"""
		return all(c == 0 for k, c in enumerate(self.coeffs) if (self.degree - k) % 2 == 1)

	def __call__(self, x: int) -> int:
		value = 0
		for c in reversed(self.coeffs):
			value = value * x + c
		return value

	def __eq__(self, other) -> bool:
		if isinstance(other, IntPolynomial):
			return self.coeffs == other.coeffs
		return NotImplemented

	def __hash__(self):
		return hash(self.coeffs)

	def __repr__(self):
		return 'IntPolynomial({})'.format(list(self.coeffs))

	def __str__(self):
		terms = []
		for k in range(self.degree, -1, -1):
			c = self.coeffs[k]
			if c == 0:
				continue
			power = '' if k == 0 else ('x' if k == 1 else 'x^{}'.format(k))
			magnitude = abs(c)
			text = str(magnitude) if power == '' or magnitude != 1 else ''
			terms.append(('-' if c < 0 else '+') + text + power)
		if not terms:
			return '0'
		text = ''.join(terms)
		return text[1:] if text.startswith('+') else text


@functools.lru_cache(maxsize=None)
def _q_coeffs(n: int) -> IntCoeffs:
	if n == 0:
		return 1,
	if n == 1:
		return 0, 1
	return poly_add(poly_shift(_q_coeffs(n - 1)), poly_scale(_q_coeffs(n - 2), -1))


def q_recurrence(n: int) -> IntPolynomial:
	if n < 0:
		raise PreconditionViolation('Q_n is defined for n >= 0, got {}'.format(n))
	return IntPolynomial(_q_coeffs(n))


def q_closed_form(n: int) -> IntPolynomial:
	"""
	sum over 0 <= k <= n/2 of (-1)^k * C(n-k, k) * x^(n-2k)
	"""
	if n < 0:
		raise PreconditionViolation('Q_n is defined for n >= 0, got {}'.format(n))
	coeffs = [0] * (n + 1)
	for k in range(n // 2 + 1):
		coeffs[n - 2 * k] = (-1) ** k * math.comb(n - k, k)
	return IntPolynomial(coeffs)


def eval_in_ring(p: IntPolynomial, x: RingElement) -> RingElement:
	value = x.spec.zero()
	for c in reversed(p.coeffs):
		value = value * x + c
	return value


def check_weight_identities(n: int) -> Tuple[bool, bool]:
	"""
	(Q_{n-2}(w_n) == 1, Q_{n-1}(w_n) == 0) in Z[2cos(pi/n)]
	"""
	if n < 3:
		raise PreconditionViolation('Part size must be at least 3, got {}'.format(n))
	weight = make_ring(n).generator()
	return eval_in_ring(q_recurrence(n - 2), weight) == 1, eval_in_ring(q_recurrence(n - 1), weight) == 0


def common_roots(n: int) -> List[int]:
	"""
	The i in 1..n-1 for which 2cos(i*pi/n) is a root of both Q_{n-2} - 1 and Q_{n-1}
	"""
	if n < 3:
		raise PreconditionViolation('Part size must be at least 3, got {}'.format(n))
	spec = make_ring(n)
	roots = []
	for i in range(1, n):
		x = embed_cos_multiple(i, spec)
		if eval_in_ring(q_recurrence(n - 2), x) == 1 and eval_in_ring(q_recurrence(n - 1), x) == 0:
			roots.append(i)
	return roots


class AltRootReport(NamedTuple):
	n: int
	k: int
	pattern: FriezePattern
	signs: Tuple[Tuple[Sign, ...], ...]  # signs[i - 1][j] is the sign of E(i, j), 1 <= i <= n - 3

	@property
	def negative_count(self) -> int:
		return sum(row.count(Sign.NEGATIVE) for row in self.signs)


def alt_root_entries(n: int, k: int) -> AltRootReport:
	"""
	Frieze of the undivided n-gon with the weight 2cos(k*pi/n) in place of 2cos(pi/n)
	"""
	if not (3 <= k < n and k % 2 == 1 and math.gcd(k, n) == 1):
		raise PreconditionViolation('Need odd 3 <= k < n coprime with n, got n = {}, k = {}'.format(n, k))
	weight = embed_cos_multiple(k, make_ring(n))
	pattern = generate([weight] * n)
	signs = tuple(
		tuple(sign(pattern.entry(i, j)) for j in range(n))
		for i in range(1, pattern.width + 1)
	)
	report = AltRootReport(n=n, k=k, pattern=pattern, signs=signs)
	if report.negative_count == 0:
		raise NoNegativeEntry('Weight 2cos({}pi/{}) produced no negative entry'.format(k, n))
	return report
