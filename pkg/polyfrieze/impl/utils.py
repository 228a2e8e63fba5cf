import json
import os
from logging import Logger
from typing import Type, TypeVar

from mcdreforged.api.utils.serializer import Serializable

T = TypeVar('T', bound=Serializable)


def load_config(config_path: str, config_class: Type[T], logger: Logger) -> T:
	"""
	A missing file is created with the defaults, then FileNotFoundError is raised.
	An existing file is read and written back so that newly added fields show up in it
	"""
	config = config_class.get_default()
	if not os.path.isfile(config_path):
		logger.warning('Configure file {} not found'.format(config_path))
		with open(config_path, 'w', encoding='utf8') as file:
			json.dump(config.serialize(), file, ensure_ascii=False, indent=4)
		logger.warning('Default configure generated at {}'.format(config_path))
		raise FileNotFoundError(config_path)
	else:
		with open(config_path, encoding='utf8') as file:
			config.update_from(json.load(file))
		with open(config_path, 'w', encoding='utf8') as file:
			json.dump(config.serialize(), file, ensure_ascii=False, indent=4)
		return config
