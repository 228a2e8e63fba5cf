"""
Subcommands, each returns the process exit code: 0 when every requested check passes
"""
import json
import os
import sys
from argparse import Namespace

from polyfrieze.common import constants
from polyfrieze.common.logger import FriezeLogger
from polyfrieze.core.census import DissectionCensus
from polyfrieze.core.config import FriezeConfig
from polyfrieze.core.frieze import build_from_dissection, first_unimodular_defect, verify_positive
from polyfrieze.core.polygon.parts import part_sizes
from polyfrieze.core.qpoly import check_weight_identities, q_closed_form, q_recurrence, common_roots, alt_root_entries
from polyfrieze.core.quiddity import QuidditySequence, integer_frieze
from polyfrieze.core.ring.render import default_generators
from polyfrieze.impl.cli.document import parse_input
from polyfrieze.impl.cli.output import render_frieze


def _read_input(source: str) -> str:
	if source == '-':
		return sys.stdin.read()
	if os.path.isfile(source):
		with open(source, encoding='utf8') as file:
			return file.read()
	return source


def frieze(args: Namespace, config: FriezeConfig, logger: FriezeLogger) -> int:
	document = parse_input(_read_input(args.input))
	dissection = document.to_dissection()
	pattern = build_from_dissection(dissection)
	logger.debug('Built {} for {}'.format(pattern, dissection))
	generators = default_generators(part_sizes(dissection), unicode=config.unicode)
	print(render_frieze(pattern, args.format, generators, config.numeric_digits, config.unicode))
	if not args.check:
		return 0
	passed = True
	defect = first_unimodular_defect(pattern)
	if defect is not None:
		logger.error('Unimodular rule broken at row {}, column {}'.format(*defect))
		passed = False
	if not verify_positive(pattern):
		logger.error('Frieze has a non-positive entry')
		passed = False
	if passed:
		logger.info('{}: unimodular and positive'.format(document.name or dissection))
	return 0 if passed else 1


def census(args: Namespace, config: FriezeConfig, logger: FriezeLogger) -> int:
	runner = DissectionCensus(cap=config.max_m_cap, workers=config.workers, logger=logger)
	reports = runner.run(config.census_max_m)
	if args.json:
		print(json.dumps([report.serialize() for report in reports], indent=2))
	else:
		for report in reports:
			periods = ', '.join('{}: {}'.format(p, n) for p, n in sorted(report.observed_periods.items(), key=lambda item: int(item[0])))
			print('m = {}  dissections {}  triangulations {}  failures {}  periods {{{}}}'.format(
				report.m, report.dissection_count, report.triangulation_count, len(report.failures), periods
			))
			for failure in report.failures:
				print('  {} {}: {}'.format(failure.diagonals, failure.property, failure.detail))
	return 0 if all(report.passed for report in reports) else 1


def identities(args: Namespace, config: FriezeConfig, logger: FriezeLogger) -> int:
	passed = True
	for n in range(3, config.identity_max_n + 1):
		unit, zero = check_weight_identities(n)
		line = 'n = {}  Q_{}(w) = 1: {}  Q_{}(w) = 0: {}'.format(n, n - 2, unit, n - 1, zero)
		if args.roots:
			line += '  common roots i = {}'.format(', '.join(map(str, common_roots(n))))
		print(line)
		if not (unit and zero):
			logger.error('Weight identities fail for n = {}'.format(n))
			passed = False
	mismatched = [n for n in range(1, constants.CLOSED_FORM_MAX_N + 1) if q_closed_form(n) != q_recurrence(n)]
	print('closed form = recurrence for 1 <= n <= {}: {}'.format(constants.CLOSED_FORM_MAX_N, not mismatched))
	if mismatched:
		logger.error('Closed form differs from the recurrence for n = {}'.format(mismatched))
		passed = False
	return 0 if passed else 1


def altroot(args: Namespace, config: FriezeConfig, logger: FriezeLogger) -> int:
	report = alt_root_entries(args.n, args.k)
	generators = default_generators([args.n], unicode=config.unicode)
	print(render_frieze(report.pattern, args.format, generators, config.numeric_digits, config.unicode))
	if args.format == 'ascii':
		for i, signs in enumerate(report.signs, start=1):
			print('row {}: {}'.format(i, ' '.join(map(str, signs))))
	logger.info('2cos({}pi/{}): {} negative entries in one period'.format(args.k, args.n, report.negative_count))
	return 0


def quiddity(args: Namespace, config: FriezeConfig, logger: FriezeLogger) -> int:
	q = QuidditySequence.parse(args.sequence)
	pattern = integer_frieze(q)
	logger.debug('Quiddity {} reconstructed with sum {}'.format(q, q.total))
	print(render_frieze(pattern, args.format, (), config.numeric_digits, config.unicode))
	return 0
