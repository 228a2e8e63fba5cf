import json
import os

import pytest

from polyfrieze.cli_entry import main
from polyfrieze.core.frieze import build_from_dissection
from polyfrieze.core.polygon.dissection import validate
from polyfrieze.core.ring.render import default_generators, parse_rendered
from polyfrieze.impl.cli.document import parse_input, format_document, DissectionDocument, DocumentError
from polyfrieze.impl.cli.output import render_frieze, frieze_document

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')
HEXAGON = '6: 0-2, 2-5, 3-5'
OCTAGON = '8: 0-4, 1-4  # triangle, square and pentagon'


def _golden(name: str) -> str:
	with open(os.path.join(GOLDEN_DIR, name), encoding='utf8') as file:
		return file.read().rstrip('\n')


def test_parse_compact():
	doc = parse_input(OCTAGON)
	assert doc.m == 8
	assert doc.diagonals == [[0, 4], [1, 4]]
	assert doc.name == 'triangle, square and pentagon'
	assert doc.to_dissection() == validate(8, [(0, 4), (1, 4)])
	assert parse_input('# comment\n\n5:\n').to_dissection().is_trivial()


def test_parse_json():
	doc = parse_input('{"m": 8, "diagonals": [[4, 0], [1, 4]], "name": "octagon"}')
	assert doc.m == 8
	assert doc.to_dissection() == validate(8, [(0, 4), (1, 4)])
	assert doc.name == 'octagon'


def test_format_round_trip():
	doc = parse_input(OCTAGON)
	assert format_document(doc) == '8: 0-4, 1-4  # triangle, square and pentagon'
	assert parse_input(format_document(doc)) == doc
	assert parse_input(format_document(doc, as_json=True)) == doc
	assert format_document(DissectionDocument(m=5, diagonals=[])) == '5:'
	for name in [' padded ', 'trailing ', '   ']:
		padded = DissectionDocument(m=5, diagonals=[[0, 2]], name=name)
		assert format_document(padded).startswith('{')
		assert parse_input(format_document(padded)) == padded


def test_compact_errors():
	with pytest.raises(DocumentError) as info:
		parse_input('6: 0-2, 1-3')
	assert info.value.kind == 'Crossing'
	assert (info.value.line, info.value.column) == (1, 9)
	with pytest.raises(DocumentError) as info:
		parse_input('6: 0-2, 1+3')
	assert info.value.kind == 'SyntaxError'
	assert info.value.column == 9
	with pytest.raises(DocumentError) as info:
		parse_input('0-2, 1-3')
	assert info.value.kind == 'SyntaxError'
	with pytest.raises(DocumentError) as info:
		parse_input('6: 0-1')
	assert info.value.kind == 'AdjacentEndpoints'
	with pytest.raises(DocumentError) as info:
		parse_input('6: 0-2\n7: 0-2')
	assert info.value.line == 2


def test_json_errors():
	with pytest.raises(DocumentError) as info:
		parse_input('{"m": 6, "diagonals": [[0, 2], [1, 3]]}')
	assert info.value.kind == 'Crossing'
	assert (info.value.line, info.value.column) == (1, 32)
	for text in ['{"m": 6', '{"m": 6}', '{"m": "6", "diagonals": []}', '{"m": 6, "diagonals": [[0, 2, 4]]}']:
		with pytest.raises(DocumentError):
			parse_input(text)


def test_ascii_golden():
	f = build_from_dissection(validate(6, [(0, 2), (2, 5), (3, 5)]))
	assert render_frieze(f) == _golden('hexagon.txt')


def test_json_document():
	d = validate(8, [(0, 4), (1, 4)])
	f = build_from_dissection(d)
	doc = frieze_document(f, default_generators([3, 4, 5]))
	assert doc.conductor == 60
	assert [g.name for g in doc.generators] == ['s', 't']
	assert len(doc.rows) == 9
	assert doc.rows[0] == ['0'] * 8
	assert doc.rows[2] == ['1+t', '1+s', 's', 's', '1+s+t', 't', 't', 't']
	assert all(len(c) == 16 for c in doc.coefficients[2])
	assert doc.numeric == []


def test_latex():
	f = build_from_dissection(validate(6, [(0, 2), (2, 5), (3, 5)]))
	lines = render_frieze(f, 'latex').splitlines()
	assert lines[0] == r'\begin{tabular}{' + 'c' * 31 + '}'
	assert lines[-1] == r'\end{tabular}'
	assert len(lines) == 9
	assert lines[3].split(' & ')[:4] == ['', '', '$2$', '']
	sqrt = render_frieze(build_from_dissection(validate(5, [(0, 2)])), 'latex', default_generators([4], unicode=True))
	assert r'\sqrt{2}' in sqrt
	with pytest.raises(ValueError):
		render_frieze(f, 'html')


def test_main_frieze(capsys):
	assert main(['frieze', '--check', HEXAGON]) == 0
	assert capsys.readouterr().out.rstrip('\n') == _golden('hexagon.txt')


def test_main_frieze_file(tmp_path, capsys):
	path = tmp_path / 'octagon.txt'
	path.write_text(OCTAGON + '\n', encoding='utf8')
	assert main(['--numeric', '5', 'frieze', '--format', 'json', str(path)]) == 0
	data = json.loads(capsys.readouterr().out)
	assert data['m'] == 8
	assert len(data['rows']) == 9
	assert data['numeric'][2][0] == '2.618'


def test_main_errors(capsys):
	assert main(['--json', 'quiddity', '2,2,2,2']) == 1
	assert json.loads(capsys.readouterr().out)['error'] == 'NotAQuiddity'
	assert main(['--json', 'frieze', '6: 0-2, 1-3']) == 1
	error = json.loads(capsys.readouterr().out)
	assert error['error'] == 'Crossing'
	assert (error['line'], error['column']) == (1, 9)
	assert main(['altroot', '5', '1']) == 1
	assert capsys.readouterr().out == ''


def test_main_quiddity(capsys):
	assert main(['quiddity', '1,3,2,1,3,2']) == 0
	lines = capsys.readouterr().out.splitlines()
	assert len(lines) == 7
	assert lines[2] == '    ' + ' ' + '   '.join('132' * 4)


def test_main_census(capsys):
	assert main(['census', '--max-m', '6']) == 0
	out = capsys.readouterr().out
	assert 'm = 6  dissections 45  triangulations 14  failures 0' in out
	assert main(['census', '--max-m', '5', '--json']) == 0
	reports = json.loads(capsys.readouterr().out)
	assert [r['dissection_count'] for r in reports] == [1, 3, 11]
	assert main(['census', '--max-m', '12']) == 1


def test_main_identities_and_altroot(capsys):
	assert main(['identities', '--max-n', '8', '--roots']) == 0
	out = capsys.readouterr().out
	assert 'n = 8  Q_6(w) = 1: True  Q_7(w) = 0: True  common roots i = 1, 3, 5, 7' in out
	assert main(['altroot', '5', '3']) == 0
	out = capsys.readouterr().out
	assert 'row 1: negative negative negative negative negative' in out


def test_config_file(tmp_path, capsys):
	path = str(tmp_path / 'polyfrieze.json')
	assert main(['--config', path, 'identities']) == 1
	assert os.path.isfile(path)
	with open(path, encoding='utf8') as file:
		data = json.load(file)
	assert data['identity_max_n'] == 30
	data['identity_max_n'] = 5
	with open(path, 'w', encoding='utf8') as file:
		json.dump(data, file)
	capsys.readouterr()
	assert main(['--config', path, 'identities']) == 0
	assert 'n = 5 ' in capsys.readouterr().out


def test_json_coefficients_and_rows_re_embed():
	d = validate(8, [(0, 4), (1, 4)])
	f = build_from_dissection(d)
	generators = default_generators([3, 4, 5])
	doc = frieze_document(f, generators)
	expected = [(f.spec.zero(),) * f.m] + f.rows()
	assert len(doc.coefficients) == len(doc.rows) == len(expected)
	for i, r in enumerate(expected):
		for j, a in enumerate(r):
			assert f.spec.element(doc.coefficients[i][j]) == a, (i, j)
			assert parse_rendered(doc.rows[i][j], f.spec, generators) == a, (i, j)


def test_numeric_after_subcommand(capsys):
	assert main(['frieze', '--numeric', '5', '--format', 'json', '8: 0-4, 1-4']) == 0
	data = json.loads(capsys.readouterr().out)
	assert data['numeric'][2][0] == '2.618'
	assert main(['quiddity', '--numeric', '3', '1,3,2,1,3,2']) == 0
	assert capsys.readouterr().out.splitlines()[2].split() == list('132' * 4)
	assert main(['altroot', '5', '3', '--numeric', '4', '--format', 'json']) == 0
	assert len(json.loads(capsys.readouterr().out)['numeric']) == 6
