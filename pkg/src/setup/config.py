import json
from os import path
from typing import Callable, List

from .ezio import prompt_value, print_success, print_warning, print_info
from ..core.constants import \
    DEFAULT_SEED, DEFAULT_HOURS, DEFAULT_HORIZON, DEFAULT_JOBS, DEFAULT_TREES, \
    DEFAULT_MIN_LEAF_QRS, DEFAULT_MIN_LEAF_QRF, DEFAULT_K_GRID, DEFAULT_Q_GRID, DEFAULT_OUT_DIR
from ..etc.config_constants import \
    DEFAULT_CONFIG_PATH, KEY_SEED, KEY_HOURS, KEY_HORIZON, KEY_JOBS, KEY_TREES, \
    KEY_MIN_LEAF_QRS, KEY_MIN_LEAF_QRF, KEY_K_GRID, KEY_Q_GRID, KEY_OUT_DIR, KEY_LOG_PATH


def _positive_int(value: str) -> int:
    number: int = int(value)
    if number < 1:
        raise ValueError(value)

    return number


def _int_grid(value: str) -> List[int]:
    values: List[int] = [_positive_int(v) for v in value.split(",") if v.strip()]
    if not values:
        raise ValueError(value)

    return values


"""
Every config.json key with its default, the question asked
for it and how an answer is parsed
"""
SETUP_KEYS: list = [
    (KEY_SEED, DEFAULT_SEED, "Seed for forests and synthetic panels", int),
    (KEY_HOURS, DEFAULT_HOURS, "Test hours per series", _positive_int),
    (KEY_HORIZON, DEFAULT_HORIZON, "Forecast horizon in hours", _positive_int),
    (KEY_JOBS, DEFAULT_JOBS, "Worker processes (-1 for every core)", int),
    (KEY_TREES, DEFAULT_TREES, "Trees per forest", _positive_int),
    (KEY_MIN_LEAF_QRS, DEFAULT_MIN_LEAF_QRS, "Minimum leaf size for qrs", _positive_int),
    (KEY_MIN_LEAF_QRF, DEFAULT_MIN_LEAF_QRF, "Minimum leaf size for qrf", _positive_int),
    (KEY_K_GRID, list(DEFAULT_K_GRID), "k values for local mode sweeps (comma separated)", _int_grid),
    (KEY_Q_GRID, list(DEFAULT_Q_GRID), "q values for leaf size sweeps (comma separated)", _int_grid),
    (KEY_OUT_DIR, DEFAULT_OUT_DIR, "Output directory", str),
    (KEY_LOG_PATH, "", "Log file (leave blank to log to the console only)", str)
]


def _setup_key(config: dict, use_defaults: bool, key: str, default, info: str, parse: Callable, read: Callable) -> None:
    if key in config and config[key] not in (None, ""):
        return

    value = default if use_defaults else prompt_value(info, default, parse, read)

    if value in (None, ""):
        config.pop(key, None)
        print_warning("No configuration set for {0}".format(key))
    else:
        config[key] = value
        print_success("{0}: {1}".format(key, value))


"""
Write config.json with every run default, asking for each key
unless use_defaults is set. Keys already in the file are kept
"""
def create_config(use_defaults: bool, config_path: str = DEFAULT_CONFIG_PATH, read: Callable[[str], str] = input) -> bool:
    try:
        config: dict = {}

        if path.exists(config_path):
            with open(config_path, "r") as f:
                try:
                    config = json.load(f)
                except ValueError:
                    print_warning("Existing {0} is not valid JSON, starting over".format(config_path))

        if not use_defaults:
            print_info("Press enter to keep a default")

        for key, default, info, parse in SETUP_KEYS:
            _setup_key(config, use_defaults, key, default, info, parse, read)

        with open(config_path, "w") as f:
            f.write(json.dumps(config, indent=4, sort_keys=True))

        return True
    except OSError:
        print_warning("\nConfig file could not be created. Exiting.")
        return False
