import functools
from typing import NamedTuple, Sequence, Union, List

from polyfrieze.common.exceptions import FriezeError
from polyfrieze.core.ring.cyclotomic import IntCoeffs, real_cyclotomic_minpoly

__all__ = [
	'RingError',
	'SpecMismatch',
	'NotDivisor',
	'RingSpec',
	'RingElement',
	'make_ring',
	'chebyshev_d',
	'embed_cos_multiple',
	'embed_part_weight',
	'part_weight_degree',
]


class RingError(FriezeError, ValueError):
	pass


class SpecMismatch(RingError):
	def __init__(self, left: int, right: int):
		super().__init__('Ring mismatch: Z[2cos(pi/{})] vs Z[2cos(pi/{})]'.format(left, right))
		self.left = left
		self.right = right


class NotDivisor(RingError):
	def __init__(self, part_size: int, conductor: int):
		super().__init__('Part size {} does not divide the conductor {}'.format(part_size, conductor))
		self.part_size = part_size
		self.conductor = conductor


class RingSpec(NamedTuple):
	"""
	Z[c], c = 2cos(pi/conductor), with the power basis 1, c, ..., c^(degree-1)
	"""
	conductor: int
	minpoly: IntCoeffs  # monic, lowest degree first

	@property
	def degree(self) -> int:
		return len(self.minpoly) - 1

	def element(self, coeffs: Sequence[int]) -> 'RingElement':
		return RingElement(self, _reduce(self, list(coeffs)))

	def of_int(self, value: int) -> 'RingElement':
		return self.element((value,))

	def zero(self) -> 'RingElement':
		return self.of_int(0)

	def one(self) -> 'RingElement':
		return self.of_int(1)

	def generator(self) -> 'RingElement':
		return self.element((0, 1))

	def __str__(self):
		return 'Z[2cos(pi/{})]'.format(self.conductor)


def _reduce(spec: RingSpec, coeffs: List[int]) -> IntCoeffs:
	"""
	Reduce modulo the monic minimal polynomial, x^d = -(psi_0 + ... + psi_{d-1} x^{d-1})
	"""
	d = spec.degree
	psi = spec.minpoly
	for k in range(len(coeffs) - 1, d - 1, -1):
		lead = coeffs[k]
		if lead:
			for i in range(d):
				coeffs[k - d + i] -= lead * psi[i]
	if len(coeffs) < d:
		coeffs.extend([0] * (d - len(coeffs)))
	return tuple(coeffs[:d])


_Operand = Union['RingElement', int]


class RingElement:
	__slots__ = ('spec', 'coeffs')

	def __init__(self, spec: RingSpec, coeffs: IntCoeffs):
		"""
		Use :meth:`RingSpec.element` unless coeffs is already reduced
		"""
		if len(coeffs) != spec.degree:
			raise ValueError('Expected {} coefficients, got {}'.format(spec.degree, len(coeffs)))
		self.spec = spec
		self.coeffs = coeffs

	def __coerce(self, other: _Operand) -> 'RingElement':
		if isinstance(other, int):
			return self.spec.of_int(other)
		if isinstance(other, RingElement):
			if other.spec.conductor != self.spec.conductor:
				raise SpecMismatch(self.spec.conductor, other.spec.conductor)
			return other
		return NotImplemented

	def __add__(self, other: _Operand) -> 'RingElement':
		other = self.__coerce(other)
		if other is NotImplemented:
			return other
		return RingElement(self.spec, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

	__radd__ = __add__

	def __sub__(self, other: _Operand) -> 'RingElement':
		other = self.__coerce(other)
		if other is NotImplemented:
			return other
		return RingElement(self.spec, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

	def __rsub__(self, other: _Operand) -> 'RingElement':
		return -self + other

	def __neg__(self) -> 'RingElement':
		return RingElement(self.spec, tuple(-x for x in self.coeffs))

	def __mul__(self, other: _Operand) -> 'RingElement':
		if isinstance(other, int):
			return RingElement(self.spec, tuple(other * x for x in self.coeffs))
		other = self.__coerce(other)
		if other is NotImplemented:
			return other
		product = [0] * (2 * self.spec.degree - 1)
		for i, x in enumerate(self.coeffs):
			if x:
				for j, y in enumerate(other.coeffs):
					if y:
						product[i + j] += x * y
		return RingElement(self.spec, _reduce(self.spec, product))

	__rmul__ = __mul__

	def __pow__(self, exponent: int) -> 'RingElement':
		if exponent < 0:
			raise ValueError('Negative power {} in {}'.format(exponent, self.spec))
		result = self.spec.one()
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			base = base * base
			exponent >>= 1
		return result

	def __eq__(self, other) -> bool:
		if isinstance(other, int):
			other = self.spec.of_int(other)
		if not isinstance(other, RingElement):
			return NotImplemented
		return self.spec.conductor == other.spec.conductor and self.coeffs == other.coeffs

	def __hash__(self):
		return hash((self.spec.conductor, self.coeffs))

	def __bool__(self) -> bool:
		return any(self.coeffs)

	def is_integer(self) -> bool:
		return not any(self.coeffs[1:])

	def to_int(self) -> int:
		if not self.is_integer():
			raise ValueError('{} is not an integer'.format(self))
		return self.coeffs[0]

	def __repr__(self):
		return 'RingElement(N={}, coeffs={})'.format(self.spec.conductor, list(self.coeffs))


@functools.lru_cache(maxsize=None)
def make_ring(conductor: int) -> RingSpec:
	if conductor < 3:
		raise RingError('Conductor must be at least 3, got {}'.format(conductor))
	return RingSpec(conductor=conductor, minpoly=real_cyclotomic_minpoly(conductor))


def chebyshev_d(k: int, x: RingElement) -> RingElement:
	"""
	D_k(x) with D_0 = 2, D_1 = x, D_k = x * D_{k-1} - D_{k-2}; D_k(2cos(a)) = 2cos(ka)
	"""
	prev, cur = x.spec.of_int(2), x
	if k == 0:
		return prev
	for _ in range(k - 1):
		prev, cur = cur, x * cur - prev
	return cur


def embed_cos_multiple(k: int, spec: RingSpec) -> RingElement:
	"""
	2cos(k * pi / N) inside Z[2cos(pi/N)]
	"""
	return chebyshev_d(k, spec.generator())


def embed_part_weight(part_size: int, spec: RingSpec) -> RingElement:
	"""
	The weight 2cos(pi/n) of an n-gonal part, triangles weigh 1 in every ring
	"""
	if part_size == 3:
		return spec.one()
	if part_size < 3 or spec.conductor % part_size != 0:
		raise NotDivisor(part_size, spec.conductor)
	return embed_cos_multiple(spec.conductor // part_size, spec)


def part_weight_degree(part_size: int) -> int:
	"""
	Degree of 2cos(pi/n) over the rationals
	"""
	return make_ring(part_size).degree
