class FriezeError(Exception):
	"""
	Base of every error raised by polyfrieze

	:attr:`kind` is the stable name used in machine-readable error reports
	"""

	@property
	def kind(self) -> str:
		return type(self).__name__
