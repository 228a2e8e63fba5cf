from mcdreforged.api.utils.serializer import Serializable

from polyfrieze.common import constants


class FriezeConfig(Serializable):
	max_m_cap: int = constants.DEFAULT_MAX_M_CAP
	census_max_m: int = constants.DEFAULT_MAX_M_CAP
	identity_max_n: int = constants.DEFAULT_IDENTITY_MAX_N
	workers: int = 1
	debug: bool = False
	unicode: bool = False
	numeric_digits: int = 0  # 0 disables decimal approximations
	log_file: str = ''  # logs/polyfrieze_<log_file>.log when not empty
