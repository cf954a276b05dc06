import json
from os import path

from ..core.constants import \
    DEFAULT_SEED, DEFAULT_HOURS, DEFAULT_HORIZON, DEFAULT_JOBS, DEFAULT_TREES, \
    DEFAULT_MIN_LEAF_QRS, DEFAULT_MIN_LEAF_QRF, DEFAULT_K_GRID, DEFAULT_Q_GRID, DEFAULT_OUT_DIR
from ..core.stack_exception import StackException
from .config_constants import \
    DEFAULT_CONFIG_PATH, KEY_SEED, KEY_HOURS, KEY_HORIZON, KEY_JOBS, KEY_TREES, \
    KEY_MIN_LEAF_QRS, KEY_MIN_LEAF_QRF, KEY_K_GRID, KEY_Q_GRID, KEY_OUT_DIR, KEY_LOG_PATH


"""
This service is responsible for reading run defaults from config.json - 
seed, test hour count, forest sizes, sweep grids and so on. Anything
missing falls back to the built-in constants, command line flags win over both
"""
class ConfigService:
    def __init__(self, config_path: str = DEFAULT_CONFIG_PATH):
        self.config_path: str = config_path
        self.raise_error_on_bad_config: bool = False


    @property
    def seed(self) -> int:
        return self._get_int(KEY_SEED, DEFAULT_SEED)


    @property
    def hours(self) -> int:
        return self._get_int(KEY_HOURS, DEFAULT_HOURS)


    @property
    def horizon(self) -> int:
        return self._get_int(KEY_HORIZON, DEFAULT_HORIZON)


    @property
    def jobs(self) -> int:
        return self._get_int(KEY_JOBS, DEFAULT_JOBS)


    @property
    def trees(self) -> int:
        return self._get_int(KEY_TREES, DEFAULT_TREES)


    @property
    def min_leaf_qrs(self) -> int:
        return self._get_int(KEY_MIN_LEAF_QRS, DEFAULT_MIN_LEAF_QRS)


    @property
    def min_leaf_qrf(self) -> int:
        return self._get_int(KEY_MIN_LEAF_QRF, DEFAULT_MIN_LEAF_QRF)


    @property
    def k_grid(self) -> list:
        return self._get_grid(KEY_K_GRID, DEFAULT_K_GRID)


    @property
    def q_grid(self) -> list:
        return self._get_grid(KEY_Q_GRID, DEFAULT_Q_GRID)


    @property
    def out_dir(self) -> str:
        val = self._get(KEY_OUT_DIR)
        return DEFAULT_OUT_DIR if val is None else str(val)


    @property
    def log_path(self) -> str:
        return self._get(KEY_LOG_PATH)


    def _get_int(self, name: str, default: int) -> int:
        val = self._get(name)
        if val is None:
            return default

        try:
            return int(val)
        except (TypeError, ValueError):
            raise StackException("Config key '{0}' must be an integer, got '{1}'".format(name, val))


    def _get_grid(self, name: str, default: tuple) -> list:
        val = self._get(name)
        if val is None:
            return list(default)

        try:
            return [int(v) for v in val]
        except (TypeError, ValueError):
            raise StackException("Config key '{0}' must be a list of integers".format(name))


    def _get(self, name: str):
        if not path.exists(path.realpath(self.config_path)):
            if self.raise_error_on_bad_config:
                raise StackException("Config file '{0}' does not exist!".format(self.config_path))
            return None

        with open(self.config_path, "r") as f:
            try:
                config = json.load(f)
                val = config[name]

                if self.raise_error_on_bad_config and (val is None or str(val).strip() == ""):
                    raise ValueError(name)
                else:
                    return val
            except (ValueError, KeyError, TypeError):
                if self.raise_error_on_bad_config:
                    raise StackException("Error reading key '{0}' from config!".format(name))
                else:
                    return None
