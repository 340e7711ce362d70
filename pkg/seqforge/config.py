import copy
import os
import yaml
import logging
from seqforge.exceptions import ConfigurationFileNotFound, InvalidConfiguration

logger = logging.getLogger(__name__)

CONFIG_FILE_NAME = 'seqforge.yaml'

DEFAULT_CONFIG = {
    'threads': None,
    'bfiles': None,
    'patches': None,
    'arith': {
        'prp_rounds': 64,
        'rho_budget': 200000,
    },
    'climb': {
        'max_steps': 500,
        'digit_cap': 1000,
    },
    'tag': {
        'max_steps': 1000000,
        'max_word_len': 1000000,
        'checkpoint_every': 10 ** 9,
    },
    'queens': {
        'time_budget': 600,
    },
    'cubefree': {
        'certify_depth': 30,
        'node_budget': 10000000,
    },
}

# Budget keys that must hold positive integers
BUDGET_SECTIONS = ['arith', 'climb', 'tag', 'queens', 'cubefree']


def find_config_file(file_name):
    """ Searches for a configuration file
        This searches the current directory and every directory above it.
        Returns None when no file is found, since every setting has a default
    """

    cur_dir = os.getcwd()

    while True:
        file_list = os.listdir(cur_dir)
        parent_dir = os.path.dirname(cur_dir)
        if file_name in file_list:
            return os.path.join(cur_dir, file_name)
        # If we are at the root directory
        elif cur_dir == parent_dir:
            return None
        else:
            cur_dir = parent_dir


def merge_defaults(config, defaults):
    """ Merge a configuration dict with a dict of defaults, one level of
        nesting deep
    """

    for key, value in defaults.items():
        if key not in config or config[key] is None:
            config[key] = copy.deepcopy(value)
        elif isinstance(value, dict) and isinstance(config[key], dict):
            for sub_key, sub_value in value.items():
                config[key].setdefault(sub_key, sub_value)


class SeqforgeConfig(object):

    def __init__(self, config_file=None, search=True):
        """
        :param config_file: Explicit path to a YAML file; must exist
        :param search: Look for seqforge.yaml upwards from the cwd when no
            explicit file is given
        """

        if config_file is not None and not os.path.isfile(config_file):
            raise ConfigurationFileNotFound(
                "Could not locate configuration file: {}".format(config_file))

        if config_file is None and search:
            config_file = find_config_file(CONFIG_FILE_NAME)

        self._config = {}

        if config_file is not None:
            logger.debug('Loading configuration file: {}'.format(config_file))
            with open(config_file, 'r') as stream:
                try:
                    self._config = yaml.safe_load(stream) or {}
                except yaml.YAMLError as exc:
                    raise InvalidConfiguration(
                        'Unable to parse YAML file {}. Error: {}'
                        ''.format(config_file, exc)
                    ) from exc
            if not isinstance(self._config, dict):
                raise InvalidConfiguration(
                    'Configuration file {} must contain a mapping'.format(config_file))
        else:
            logger.debug('No configuration file found, using defaults')

        self._config['config_file'] = config_file
        merge_defaults(self._config, DEFAULT_CONFIG)

        for section in BUDGET_SECTIONS:
            if not isinstance(self._config[section], dict):
                raise InvalidConfiguration('Section {} must be a mapping'.format(section))
            for key, value in self._config[section].items():
                if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                    raise InvalidConfiguration(
                        'Budget {}.{} must be a positive integer, got {!r}'.format(
                            section, key, value))

        threads = self._config['threads']
        if threads is not None and (not isinstance(threads, int) or threads < 1):
            raise InvalidConfiguration('threads must be a positive integer, got {!r}'.format(threads))

    def __getattr__(self, name):
        try:
            return self._config[name]
        except KeyError:
            raise AttributeError(name)

    def budget(self, section, key):
        return self._config[section][key]
