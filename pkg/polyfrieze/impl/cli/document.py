"""
Dissection documents, as a compact line or as a JSON object

	8: 0-4, 1-4  # octagon with a triangle, a square and a pentagon
	{"m": 8, "diagonals": [[0, 4], [1, 4]], "name": "octagon with a triangle, a square and a pentagon"}
"""
import json
import re
from typing import List, Tuple

from mcdreforged.api.utils.serializer import Serializable

from polyfrieze.common.exceptions import FriezeError
from polyfrieze.core.polygon.dissection import PolygonDissection, DissectionError, validate

__all__ = [
	'DocumentError',
	'DissectionDocument',
	'parse_input',
	'format_document',
	'ErrorDocument',
]

_HEAD = re.compile(r'\s*(\d+)\s*:')
_PAIR = re.compile(r'\s*(\d+)\s*-\s*(\d+)\s*')
_JSON_PAIR = re.compile(r'\[\s*-?\d+\s*,\s*-?\d+\s*]')


class DocumentError(FriezeError, ValueError):
	def __init__(self, reason: str, *, line: int, column: int, kind: str = 'SyntaxError'):
		"""
		:param kind: name of the underlying validation error, SyntaxError for malformed text
		"""
		super().__init__('line {}, column {}: {}'.format(line, column, reason))
		self.reason = reason
		self.line = line
		self.column = column
		self.__kind = kind

	@property
	def kind(self) -> str:
		return self.__kind


class DissectionDocument(Serializable):
	m: int = 3
	diagonals: List[List[int]] = []
	name: str = ''

	def to_dissection(self) -> PolygonDissection:
		return validate(self.m, self.diagonals)

	@classmethod
	def of(cls, d: PolygonDissection, name: str = '') -> 'DissectionDocument':
		return cls(m=d.m, diagonals=[list(diagonal) for diagonal in d.diagonals], name=name)

	def __eq__(self, other):
		if isinstance(other, DissectionDocument):
			return self.serialize() == other.serialize()
		return NotImplemented

	__hash__ = None


def _validated(m: int, pairs: List[Tuple[int, int]], name: str, positions: List[Tuple[int, int]], head: Tuple[int, int]) -> DissectionDocument:
	try:
		d = validate(m, pairs)
	except DissectionError as e:
		line, column = positions[e.index] if e.index is not None else head
		raise DocumentError(str(e), line=line, column=column, kind=e.kind) from e
	return DissectionDocument.of(d, name)


def _position(text: str, offset: int) -> Tuple[int, int]:
	line = text.count('\n', 0, offset) + 1
	return line, offset - (text.rfind('\n', 0, offset) + 1) + 1


def _parse_json(text: str) -> DissectionDocument:
	try:
		data = json.loads(text)
	except json.JSONDecodeError as e:
		raise DocumentError(e.msg, line=e.lineno, column=e.colno) from None
	head = _position(text, len(text) - len(text.lstrip()))
	if not isinstance(data, dict):
		raise DocumentError('Expected a JSON object', line=head[0], column=head[1])
	for key in ('m', 'diagonals'):
		if key not in data:
			raise DocumentError('Missing key "{}"'.format(key), line=head[0], column=head[1])
	m, diagonals, name = data['m'], data['diagonals'], data.get('name', '')
	if not isinstance(m, int) or isinstance(m, bool):
		raise DocumentError('"m" must be an integer, got {!r}'.format(m), line=head[0], column=head[1])
	if not isinstance(name, str):
		raise DocumentError('"name" must be a string, got {!r}'.format(name), line=head[0], column=head[1])
	if not isinstance(diagonals, list) or not all(
			isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in p) for p in diagonals
	):
		raise DocumentError('"diagonals" must be a list of [a, b] integer pairs', line=head[0], column=head[1])
	start = text.find('"diagonals"')
	positions = [_position(text, match.start()) for match in _JSON_PAIR.finditer(text, max(start, 0))]
	positions.extend([head] * (len(diagonals) - len(positions)))
	return _validated(m, [tuple(p) for p in diagonals], name, positions, head)


def _parse_compact(text: str) -> DissectionDocument:
	lines = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip() and not line.lstrip().startswith('#')]
	if len(lines) != 1:
		raise DocumentError('Expected exactly one dissection line, got {}'.format(len(lines)), line=lines[1][0] if len(lines) > 1 else 1, column=1)
	line_no, line = lines[0]
	body, _, name = line.partition('#')
	head = _HEAD.match(body)
	if head is None:
		raise DocumentError('Expected "m:" at the start of the line', line=line_no, column=len(body) - len(body.lstrip()) + 1)
	m = int(head.group(1))
	pairs: List[Tuple[int, int]] = []
	positions: List[Tuple[int, int]] = []
	rest = body[head.end():]
	if rest.strip():
		offset = head.end()
		for segment in rest.split(','):
			match = _PAIR.fullmatch(segment)
			column = offset + len(segment) - len(segment.lstrip()) + 1
			if match is None:
				raise DocumentError('Expected a diagonal "a-b", got {!r}'.format(segment.strip()), line=line_no, column=column)
			pairs.append((int(match.group(1)), int(match.group(2))))
			positions.append((line_no, column))
			offset += len(segment) + 1
	return _validated(m, pairs, name.strip(), positions, (line_no, head.start(1) + 1))


def parse_input(text: str) -> DissectionDocument:
	if text.lstrip().startswith('{'):
		return _parse_json(text)
	return _parse_compact(text)


def format_document(doc: DissectionDocument, *, as_json: bool = False) -> str:
	if as_json or '\n' in doc.name or doc.name != doc.name.strip():
		return json.dumps(doc.serialize(), ensure_ascii=False)
	text = '{}: {}'.format(doc.m, ', '.join('{}-{}'.format(a, b) for a, b in doc.diagonals)).rstrip()
	if doc.name:
		text += '  # {}'.format(doc.name)
	return text


class ErrorDocument(Serializable):
	error: str = ''
	message: str = ''
	line: int = 0
	column: int = 0

	@classmethod
	def of(cls, error: FriezeError) -> 'ErrorDocument':
		return cls(error=error.kind, message=str(error), line=getattr(error, 'line', 0), column=getattr(error, 'column', 0))
