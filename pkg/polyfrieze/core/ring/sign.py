"""
Exact sign of ring elements

Zero is decided structurally. Nonzero elements first go through a floating point
filter with a rigorous error bound; undecided cases are enclosed with mpmath
intervals, doubling the working precision until the enclosure excludes 0
"""
import functools
import math
import sys
from enum import Enum
from threading import RLock
from typing import Optional, Tuple

from mpmath import iv, mp

from polyfrieze.common import constants
from polyfrieze.core.ring.element import RingElement

__all__ = [
	'Sign',
	'sign',
	'to_mpf',
]


class Sign(Enum):
	NEGATIVE = -1
	ZERO = 0
	POSITIVE = 1

	def __str__(self):
		return self.name.lower()


# mpmath.iv precision is process-global
_iv_lock = RLock()


@functools.lru_cache(maxsize=None)
def _float_powers(conductor: int, degree: int) -> Tuple[float, ...]:
	c = 2 * math.cos(math.pi / conductor)
	return tuple(c ** k for k in range(degree))


def _filtered_sign(a: RingElement) -> Optional[Sign]:
	powers = _float_powers(a.spec.conductor, a.spec.degree)
	try:
		terms = [float(x) * p for x, p in zip(a.coeffs, powers)]
	except OverflowError:
		return None
	value = math.fsum(terms)
	magnitude = sum(abs(t) for t in terms)
	if math.isinf(magnitude):
		return None
	bound = 8 * (a.spec.degree + 2) * sys.float_info.epsilon * magnitude
	if value > bound:
		return Sign.POSITIVE
	if value < -bound:
		return Sign.NEGATIVE
	return None


def _interval_sign(a: RingElement, precision: int) -> Optional[Sign]:
	with _iv_lock:
		saved = iv.prec
		iv.prec = precision
		try:
			c = 2 * iv.cos(iv.pi / a.spec.conductor)
			value = iv.mpf(0)
			for x in reversed(a.coeffs):
				value = value * c + x
			if value.a > 0:
				return Sign.POSITIVE
			if value.b < 0:
				return Sign.NEGATIVE
			return None
		finally:
			iv.prec = saved


def sign(a: RingElement, *, filtered: bool = True) -> Sign:
	if not any(a.coeffs):
		return Sign.ZERO
	result = _filtered_sign(a) if filtered else None
	precision = constants.SIGN_START_PRECISION
	while result is None:
		# terminates: a nonzero element has a nonzero real value
		result = _interval_sign(a, precision)
		precision *= 2
	return result


def to_mpf(a: RingElement, dps: int):
	"""
	Decimal approximation of a for display, dps significant digits
	"""
	with mp.workdps(dps + 10):
		c = 2 * mp.cos(mp.pi / a.spec.conductor)
		value = mp.mpf(0)
		for x in reversed(a.coeffs):
			value = value * c + x
		return +value
