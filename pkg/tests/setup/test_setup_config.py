import json

from src.core.constants import DEFAULT_HOURS, DEFAULT_Q_GRID
from src.setup.config import SETUP_KEYS, create_config


def _answers(*values):
    replies = iter(values)
    return lambda _: next(replies)


def test_defaults_without_prompting(tmp_path):
    config_path = str(tmp_path / "config.json")

    assert create_config(True, config_path)

    config = json.loads(open(config_path).read())
    assert config["hours"] == DEFAULT_HOURS
    assert config["q_grid"] == list(DEFAULT_Q_GRID)
    assert "log_path" not in config


def test_answers_are_parsed_and_retried(tmp_path):
    config_path = str(tmp_path / "config.json")
    # seed, then a bad hours answer before a good one, then enter for the rest
    answers = ["9", "zero", "50", "", "", "", "", "", "20,40", "", "", ""]

    assert create_config(False, config_path, read=_answers(*answers))

    config = json.loads(open(config_path).read())
    assert config["seed"] == 9
    assert config["hours"] == 50
    assert config["k_grid"] == [20, 40]
    assert len(config) == len(SETUP_KEYS) - 1


def test_existing_keys_are_kept(tmp_path):
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps({"trees": 7}))

    assert create_config(True, str(config_path))
    assert json.loads(config_path.read_text())["trees"] == 7
