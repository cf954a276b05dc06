import json

import pytest

from src.core.constants import DEFAULT_HOURS, DEFAULT_K_GRID, DEFAULT_OUT_DIR, DEFAULT_TREES
from src.core.stack_exception import StackException
from src.etc.config_service import ConfigService


def _config(tmp_path, values: dict) -> ConfigService:
    file_path = tmp_path / "config.json"
    file_path.write_text(json.dumps(values))
    return ConfigService(str(file_path))


def test_missing_file_falls_back_to_defaults(no_config):
    assert no_config.hours == DEFAULT_HOURS
    assert no_config.trees == DEFAULT_TREES
    assert no_config.k_grid == list(DEFAULT_K_GRID)
    assert no_config.out_dir == DEFAULT_OUT_DIR
    assert no_config.log_path is None


def test_values_from_the_file(tmp_path):
    config = _config(tmp_path, {"hours": 30, "seed": 7, "k_grid": [20, 40], "out_dir": "runs"})

    assert config.hours == 30
    assert config.seed == 7
    assert config.k_grid == [20, 40]
    assert config.out_dir == "runs"
    assert config.jobs == 1


def test_bad_values_raise(tmp_path):
    config = _config(tmp_path, {"hours": "many", "q_grid": 5})

    with pytest.raises(StackException, match="must be an integer"):
        config.hours
    with pytest.raises(StackException, match="list of integers"):
        config.q_grid


def test_strict_mode(tmp_path, no_config):
    no_config.raise_error_on_bad_config = True
    with pytest.raises(StackException, match="does not exist"):
        no_config.seed

    config = _config(tmp_path, {"seed": ""})
    config.raise_error_on_bad_config = True
    with pytest.raises(StackException, match="Error reading key 'seed'"):
        config.seed
