"""
Integer polynomials behind the ring Z[2cos(pi/N)]

Polynomials are tuples of integer coefficients, lowest degree first
"""
import functools
from typing import List, Sequence, Tuple

from sympy import divisors, totient

__all__ = [
	'IntCoeffs',
	'poly_trim',
	'poly_add',
	'poly_scale',
	'poly_shift',
	'poly_divmod_monic',
	'cyclotomic_polynomial',
	'chebyshev_d_polynomial',
	'real_cyclotomic_minpoly',
	'euler_phi',
]

IntCoeffs = Tuple[int, ...]


def poly_trim(coeffs: Sequence[int]) -> IntCoeffs:
	coeffs = list(coeffs)
	while coeffs and coeffs[-1] == 0:
		coeffs.pop()
	return tuple(coeffs)


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntCoeffs:
	size = max(len(a), len(b))
	return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])


def poly_scale(a: Sequence[int], k: int) -> IntCoeffs:
	return poly_trim([k * x for x in a])


def poly_shift(a: Sequence[int], k: int = 1) -> IntCoeffs:
	"""
	Multiply by x^k
	"""
	return poly_trim([0] * k + list(a)) if a else ()


def poly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> Tuple[IntCoeffs, IntCoeffs]:
	"""
	Long division by a monic divisor, integer only
	"""
	den = poly_trim(den)
	if not den or den[-1] != 1:
		raise ValueError('Divisor {} is not monic'.format(den))
	rem: List[int] = list(poly_trim(num))
	if len(rem) < len(den):
		return (), tuple(rem)
	quot = [0] * (len(rem) - len(den) + 1)
	for k in range(len(rem) - 1, len(den) - 2, -1):
		lead = rem[k]
		if lead:
			shift = k - len(den) + 1
			quot[shift] = lead
			for i, x in enumerate(den):
				rem[shift + i] -= lead * x
	return poly_trim(quot), poly_trim(rem)


def euler_phi(n: int) -> int:
	return int(totient(n))


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntCoeffs:
	"""
	Phi_n, obtained from x^n - 1 by dividing out Phi_d for every proper divisor d of n
	"""
	if n < 1:
		raise ValueError('Cyclotomic index must be positive, got {}'.format(n))
	poly: IntCoeffs = (-1,) + (0,) * (n - 1) + (1,)
	for d in divisors(n):
		if d < n:
			poly, rem = poly_divmod_monic(poly, cyclotomic_polynomial(d))
			if rem:
				raise ArithmeticError('Phi_{} does not divide x^{} - 1'.format(d, n))
	return poly


@functools.lru_cache(maxsize=None)
def chebyshev_d_polynomial(k: int) -> IntCoeffs:
	"""
	D_k with D_k(x + 1/x) = x^k + x^-k, i.e. D_k(2cos(a)) = 2cos(ka)
	"""
	if k < 0:
		raise ValueError('Negative index {}'.format(k))
	if k == 0:
		return 2,
	if k == 1:
		return 0, 1
	return poly_add(poly_shift(chebyshev_d_polynomial(k - 1)), poly_scale(chebyshev_d_polynomial(k - 2), -1))


@functools.lru_cache(maxsize=None)
def real_cyclotomic_minpoly(n: int) -> IntCoeffs:
	"""
	Minimal polynomial Psi_n of 2cos(pi/n)

	Phi_{2n} is palindromic of degree 2d, so x^-d * Phi_{2n}(x) is a polynomial in y = x + 1/x:
	Psi_n(y) = a_d + sum_k a_{d+k} * D_k(y)
	"""
	if n < 3:
		raise ValueError('Conductor must be at least 3, got {}'.format(n))
	phi = cyclotomic_polynomial(2 * n)
	d = (len(phi) - 1) // 2
	if phi != phi[::-1]:
		raise ArithmeticError('Phi_{} is not palindromic'.format(2 * n))
	psi: IntCoeffs = (phi[d],)
	for k in range(1, d + 1):
		psi = poly_add(psi, poly_scale(chebyshev_d_polynomial(k), phi[d + k]))
	return psi
