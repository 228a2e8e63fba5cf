PACKAGE_NAME = 'polyfrieze'
VERSION = '1.0.0'

DEFAULT_MAX_M_CAP = 9
DEFAULT_IDENTITY_MAX_N = 30
CLOSED_FORM_MAX_N = 64

SIGN_START_PRECISION = 64  # bits

LOGGING_DIR = 'logs'
