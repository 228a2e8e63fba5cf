import argparse
import json
import sys
from typing import Optional, Sequence

from polyfrieze.common import constants
from polyfrieze.common.exceptions import FriezeError
from polyfrieze.common.logger import FriezeLogger

__all__ = [
	'main'
]

_FORMATS = ('ascii', 'json', 'latex')


def frieze(args, config, logger) -> int:
	from polyfrieze.impl.cli import commands
	return commands.frieze(args, config, logger)


def census(args, config, logger) -> int:
	from polyfrieze.impl.cli import commands
	return commands.census(args, config, logger)


def identities(args, config, logger) -> int:
	from polyfrieze.impl.cli import commands
	return commands.identities(args, config, logger)


def altroot(args, config, logger) -> int:
	from polyfrieze.impl.cli import commands
	return commands.altroot(args, config, logger)


def quiddity(args, config, logger) -> int:
	from polyfrieze.impl.cli import commands
	return commands.quiddity(args, config, logger)


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(prog=constants.PACKAGE_NAME, description='Frieze patterns of polygon dissections')
	parser.add_argument('--version', action='version', version='%(prog)s {}'.format(constants.VERSION))
	parser.add_argument('--config', help='JSON configure file, created with the defaults when missing')
	parser.add_argument('--debug', action='store_true', help='Debug logging')
	parser.add_argument('--json', action='store_true', help='Machine-readable errors and reports')
	parser.add_argument('--unicode', action='store_true', default=None, help='Write weights as √2, √3 where possible')
	parser.add_argument('--numeric', type=int, metavar='DIGITS', help='Append decimal approximations')
	subparsers = parser.add_subparsers(dest='command', required=True)

	def add_format(sub: argparse.ArgumentParser):
		sub.add_argument('--format', choices=_FORMATS, default='ascii')
		sub.add_argument('--numeric', type=int, metavar='DIGITS', default=argparse.SUPPRESS, help='Append decimal approximations')

	sub = subparsers.add_parser('frieze', help='Build and print the frieze of a dissection')
	sub.add_argument('input', help='"m: a-b, c-d", a JSON object, a file name, or - for stdin')
	sub.add_argument('--check', action='store_true', help='Also check the unimodular rule and positivity')
	add_format(sub)
	sub.set_defaults(entry=frieze)

	sub = subparsers.add_parser('census', help='Check every dissection of the m-gons up to --max-m')
	sub.add_argument('--max-m', type=int, dest='max_m')
	sub.add_argument('--cap', type=int, help='Largest polygon size the census accepts')
	sub.add_argument('--workers', type=int, help='Worker processes, 1 runs in process')
	sub.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help='JSON report')
	sub.set_defaults(entry=census)

	sub = subparsers.add_parser('identities', help='Check Q_{n-2}(w_n) = 1, Q_{n-1}(w_n) = 0 and the closed form of Q_n')
	sub.add_argument('--max-n', type=int, dest='max_n')
	sub.add_argument('--roots', action='store_true', help='List the common roots 2cos(i pi/n) as well')
	sub.set_defaults(entry=identities)

	sub = subparsers.add_parser('altroot', help='Frieze of the undivided n-gon with weight 2cos(k pi/n)')
	sub.add_argument('n', type=int)
	sub.add_argument('k', type=int)
	add_format(sub)
	sub.set_defaults(entry=altroot)

	sub = subparsers.add_parser('quiddity', help='Reconstruct a triangulation from a quiddity sequence and print its frieze')
	sub.add_argument('sequence', help='Comma separated positive integers, e.g. 1,3,2,1,3,2')
	add_format(sub)
	sub.set_defaults(entry=quiddity)
	return parser


def _apply_overrides(config, args: argparse.Namespace):
	overrides = {
		'census_max_m': getattr(args, 'max_m', None),
		'max_m_cap': getattr(args, 'cap', None),
		'workers': getattr(args, 'workers', None),
		'identity_max_n': getattr(args, 'max_n', None),
		'unicode': args.unicode,
		'numeric_digits': args.numeric,
	}
	for key, value in overrides.items():
		if value is not None:
			setattr(config, key, value)
	config.debug = config.debug or args.debug


def _report_error(args: argparse.Namespace, logger: FriezeLogger, error: FriezeError):
	if args.json:
		from polyfrieze.impl.cli.document import ErrorDocument
		print(json.dumps(ErrorDocument.of(error).serialize(), ensure_ascii=False))
	else:
		logger.error('{}: {}'.format(error.kind, error))


def main(argv: Optional[Sequence[str]] = None) -> int:
	from polyfrieze.core.config import FriezeConfig
	from polyfrieze.impl.utils import load_config

	args = build_parser().parse_args(argv)
	FriezeLogger.set_debug_all(args.debug)
	logger = FriezeLogger(constants.PACKAGE_NAME)
	if args.config:
		try:
			config = load_config(args.config, FriezeConfig, logger)
		except FileNotFoundError:
			return 1
	else:
		config = FriezeConfig.get_default()
	_apply_overrides(config, args)
	FriezeLogger.set_debug_all(config.debug)
	if config.log_file:
		logger = FriezeLogger(constants.PACKAGE_NAME, file_name=config.log_file)
	try:
		return args.entry(args, config, logger)
	except FriezeError as e:
		_report_error(args, logger, e)
		return 1
	finally:
		logger.close_file()


if __name__ == '__main__':
	sys.exit(main())
