import pytest

from src.core.method_config import MethodConfig
from src.core.stack_exception import StackException
from src.forest.forest_params import ForestParams


def test_defaults_per_method():
    qrs = MethodConfig.defaults("qrs")
    qrf = MethodConfig.defaults("qrf")
    qlr = MethodConfig.defaults("qlr")

    assert qrs.forest.q == 1 and qrs.forest.p == 100
    assert qrf.forest.q == 10
    assert qlr.forest is None
    assert qlr.rearrange and not qrf.rearrange and not qrs.rearrange


def test_labels():
    assert MethodConfig.defaults("qrf").label == "qrf-global-q10"
    assert MethodConfig.defaults("qlr", "local", k=20).label == "qlr-local-k20"
    assert MethodConfig.defaults("qrs", "local", k=40, min_leaf=5).label == "qrs-local-k40-q5"


def test_replace_keeps_other_fields():
    config = MethodConfig.defaults("qrf", seed=7)
    local = config.replace(mode="local", k=30)

    assert local.k == 30 and local.seed == 7 and local.forest == config.forest
    assert config.mode == "global"


@pytest.mark.parametrize("kwargs", [
    {"method": "svm", "mode": "global"},
    {"method": "qlr", "mode": "nearby"},
    {"method": "qlr", "mode": "local"},
    {"method": "qlr", "mode": "local", "k": 0},
    {"method": "qlr", "mode": "global", "horizon": 0},
    {"method": "qrf", "mode": "global"}
])
def test_invalid_configs(kwargs):
    with pytest.raises(StackException):
        MethodConfig(**kwargs)


def test_forest_params_validation():
    assert ForestParams(r=None).features_per_split(16) == 5
    assert ForestParams(r=None).features_per_split(2) == 1

    with pytest.raises(StackException):
        ForestParams(p=0)
    with pytest.raises(StackException):
        ForestParams(q=0)
    with pytest.raises(StackException):
        ForestParams(r=3).features_per_split(2)
