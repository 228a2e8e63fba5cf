import sys

from polyfrieze import cli_entry

if __name__ == '__main__':
	sys.exit(cli_entry.main())
