"""
Frieze tables as staggered text, JSON and LaTeX

Entry E(i, j) sits at half-column 2j + i + 1 below a top row of zeros, so row i is
indented by i + 1 half cells. Text and LaTeX show two periods
"""
import json
import re
from typing import List, Sequence, Callable

from mcdreforged.api.utils.serializer import Serializable
from mpmath import nstr

from polyfrieze.core.frieze import FriezePattern
from polyfrieze.core.ring.element import RingElement
from polyfrieze.core.ring.render import Generator, render
from polyfrieze.core.ring.sign import to_mpf

__all__ = [
	'FORMATS',
	'GeneratorDocument',
	'FriezeDocument',
	'frieze_document',
	'render_frieze',
]

FORMATS = ('ascii', 'json', 'latex')
_PERIODS = 2


class GeneratorDocument(Serializable):
	name: str = ''
	part_size: int = 3


class FriezeDocument(Serializable):
	m: int = 3
	width: int = 0
	conductor: int = 3
	generators: List[GeneratorDocument] = []
	rows: List[List[str]] = []  # zeros on top, then rows 0..width+2; rows[i + 1][j] is E(i, j)
	coefficients: List[List[List[int]]] = []  # power basis coefficients in 2cos(pi/conductor)
	numeric: List[List[str]] = []  # only with numeric digits


def _all_rows(f: FriezePattern) -> List[Sequence[RingElement]]:
	return [(f.spec.zero(),) * f.m] + f.rows()


def _numeric(a: RingElement, digits: int) -> str:
	return nstr(to_mpf(a, digits), digits)


def frieze_document(f: FriezePattern, generators: Sequence[Generator] = (), numeric_digits: int = 0) -> FriezeDocument:
	rows = _all_rows(f)
	return FriezeDocument(
		m=f.m,
		width=f.width,
		conductor=f.spec.conductor,
		generators=[GeneratorDocument(name=g.name, part_size=g.part_size) for g in generators],
		rows=[[render(a, generators) for a in r] for r in rows],
		coefficients=[[list(a.coeffs) for a in r] for r in rows],
		numeric=[[_numeric(a, numeric_digits) for a in r] for r in rows] if numeric_digits > 0 else [],
	)


def _labels(f: FriezePattern, generators: Sequence[Generator], numeric_digits: int, latex: bool) -> List[List[str]]:
	result = []
	for r in _all_rows(f):
		labels = []
		for a in r:
			text = render(a, generators)
			if latex:
				text = _latex_math(text)
			if numeric_digits > 0 and not a.is_integer():
				text += ' ({})'.format(_numeric(a, numeric_digits)) if not latex else r' \approx {}'.format(_numeric(a, numeric_digits))
			labels.append(text)
		result.append(labels)
	return result


def _render_ascii(labels: List[List[str]], m: int) -> str:
	cell = max(len(text) for row in labels for text in row) + 2
	cell += cell % 2
	half = cell // 2
	lines = []
	for k, row in enumerate(labels):
		line = ' ' * (half * k) + ''.join(row[j % m].center(cell) for j in range(_PERIODS * m))
		lines.append(line.rstrip())
	return '\n'.join(lines)


_LATEX_RULES: List[Callable[[str], str]] = [
	lambda s: re.sub(r'\s*\[c=2cos\(pi/(\d+)\)]', r'\\;[c=2\\cos(\\pi/\1)]', s),
	lambda s: re.sub(r'\((\d+)/(\d+)\)', r'\\tfrac{\1}{\2}', s),
	lambda s: re.sub(r'\^(\d+)', r'^{\1}', s),
	lambda s: re.sub(r'√(\d+)', r'\\sqrt{\1}', s),
	lambda s: s.replace('·', r'\cdot '),
]


def _latex_math(text: str) -> str:
	for rule in _LATEX_RULES:
		text = rule(text)
	return text


def _render_latex(labels: List[List[str]], m: int) -> str:
	columns = 2 * _PERIODS * m + len(labels)
	lines = [r'\begin{tabular}{' + 'c' * columns + '}']
	for k, row in enumerate(labels):
		cells = [''] * columns
		for j in range(_PERIODS * m):
			cells[2 * j + k] = '${}$'.format(row[j % m])
		lines.append(' & '.join(cells) + r' \\')
	lines.append(r'\end{tabular}')
	return '\n'.join(lines)


def render_frieze(
		f: FriezePattern, fmt: str = 'ascii', generators: Sequence[Generator] = (),
		numeric_digits: int = 0, unicode: bool = False
) -> str:
	"""
	:param unicode: keep non-ASCII generator names unescaped in JSON
	"""
	if fmt == 'json':
		return json.dumps(frieze_document(f, generators, numeric_digits).serialize(), ensure_ascii=not unicode)
	if fmt == 'ascii':
		return _render_ascii(_labels(f, generators, numeric_digits, latex=False), f.m)
	if fmt == 'latex':
		return _render_latex(_labels(f, generators, numeric_digits, latex=True), f.m)
	raise ValueError('Unknown format {}, expected one of {}'.format(fmt, ', '.join(FORMATS)))
