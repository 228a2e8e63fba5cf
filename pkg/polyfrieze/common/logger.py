import os
import sys
import time
import weakref
import zipfile
from logging import FileHandler, Formatter, Logger, DEBUG, StreamHandler, INFO
from threading import RLock
from typing import Optional, Set

from colorlog import ColoredFormatter

from polyfrieze.common import constants


class SyncStderrStreamHandler(StreamHandler):
	"""
	stdout carries rendered tables and JSON, so console logging goes to stderr
	"""
	__write_lock = RLock()

	def __init__(self):
		super().__init__(sys.stderr)

	def emit(self, record) -> None:
		with self.__write_lock:
			super().emit(record)


def _archive_old_log(path: str):
	stamp = time.strftime('%Y-%m-%d', time.localtime(os.stat(path).st_mtime))
	counter = 1
	while os.path.isfile(os.path.join(os.path.dirname(path), '{}-{}.zip'.format(stamp, counter))):
		counter += 1
	with zipfile.ZipFile(os.path.join(os.path.dirname(path), '{}-{}.zip'.format(stamp, counter)), 'w') as zipf:
		zipf.write(path, arcname=os.path.basename(path), compress_type=zipfile.ZIP_DEFLATED)
	os.remove(path)


def create_file_handler(name: str) -> FileHandler:
	path = os.path.join(constants.LOGGING_DIR, '{}_{}.log'.format(constants.PACKAGE_NAME, name))
	os.makedirs(os.path.dirname(path), exist_ok=True)
	if os.path.isfile(path):
		_archive_old_log(path)
	handler = FileHandler(path, encoding='utf8')
	handler.setFormatter(Formatter(
		'[%(name)s] [%(asctime)s] [%(processName)s/%(levelname)s]: %(message)s',
		datefmt='%Y-%m-%d %H:%M:%S'
	))
	return handler


class FriezeLogger(Logger):
	LOG_COLORS = {
		'DEBUG': 'blue',
		'INFO': 'green',
		'WARNING': 'yellow',
		'ERROR': 'red',
		'CRITICAL': 'bold_red',
	}
	SECONDARY_LOG_COLORS = {
		'message': {
			'WARNING': 'yellow',
			'ERROR': 'red',
			'CRITICAL': 'red'
		}
	}
	__DEBUG_SWITCH = False
	__REFS: Set['FriezeLogger'] = weakref.WeakSet()

	@classmethod
	def set_debug_all(cls, value: bool):
		cls.__DEBUG_SWITCH = value
		for logger in cls.__REFS:
			logger.__refresh_debug_level()

	def __init__(self, name: str, *, file_name: Optional[str] = None):
		super().__init__(name)
		self.console_handler = SyncStderrStreamHandler()
		self.console_handler.setFormatter(ColoredFormatter(
			'[%(name)s] [%(asctime)s] [%(threadName)s/%(log_color)s%(levelname)s%(reset)s]: %(message_log_color)s%(message)s%(reset)s',
			log_colors=self.LOG_COLORS,
			secondary_log_colors=self.SECONDARY_LOG_COLORS,
			datefmt='%H:%M:%S'
		))
		self.addHandler(self.console_handler)
		self.file_handler: Optional[FileHandler] = None
		if file_name:
			self.file_handler = create_file_handler(file_name)
			self.addHandler(self.file_handler)
		self.__REFS.add(self)
		self.__refresh_debug_level()

	def __refresh_debug_level(self):
		self.setLevel(DEBUG if self.__DEBUG_SWITCH else INFO)

	def close_file(self):
		if self.file_handler is not None:
			self.removeHandler(self.file_handler)
			self.file_handler.close()
			self.file_handler = None
